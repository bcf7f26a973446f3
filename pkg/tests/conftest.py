"""Shared fixtures: the involution-number problem solved once per session."""

import pytest

from recasymp import a85_frame, a85_recurrence, involution_numbers, solve_expansion


@pytest.fixture(scope="session")
def a85():
    return a85_recurrence()


@pytest.fixture(scope="session")
def a85_fr():
    return a85_frame()


@pytest.fixture(scope="session")
def a85_k10(a85, a85_fr):
    return solve_expansion(a85, a85_fr, 10)


@pytest.fixture(scope="session")
def t_values():
    """t_0 .. t_300, exact."""
    return involution_numbers(300)
