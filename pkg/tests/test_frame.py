"""Growth frames and the shift ratio F(n-j)/F(n) as an exact series."""

import mpmath
import pytest

from recasymp import (
    Frame,
    PuiseuxSeries,
    RamificationError,
    Rational,
    frame_ratio,
    frame_ratio_parts,
    shift_exponent,
)


def test_frame_construction_and_equality():
    fr = Frame("1/2", "1", "0", "-1/4")
    assert fr.beta == Rational(1, 2)
    assert fr.c == 1
    assert fr.alpha == 0
    assert fr.kappa == Rational(-1, 4)
    assert fr == Frame(Rational(1, 2), 1, 0, Rational(-1, 4))
    assert fr != Frame("1/2", "1", "0", "0")
    with pytest.raises(AttributeError):
        fr.beta = 1


def test_frame_kappa_defaults_to_zero():
    assert Frame("1/2", "1", "0").kappa == 0


def test_frame_rejects_floats():
    with pytest.raises(TypeError):
        Frame(0.5, 1, 0, 0)


def test_frame_json_round_trip():
    fr = Frame("1/2", "1", "0", "-1/4")
    data = fr.to_json_dict()
    assert data == {"beta": "1/2", "c": "1", "alpha": "0", "kappa": "-1/4"}
    assert Frame.from_json_dict(data) == fr


def test_shift_exponent():
    assert shift_exponent(Rational(1, 2), 1) == 1
    assert shift_exponent(Rational(1, 2), 2) == 2
    assert shift_exponent(Rational(1), 3) == 6
    assert shift_exponent(Rational(0), 4) == 0
    # 2 * (1/3) * 3 is an integer even though beta itself has denominator 3.
    assert shift_exponent(Rational(1, 3), 3) == 2


def test_shift_exponent_off_lattice():
    with pytest.raises(RamificationError):
        shift_exponent(Rational(1, 3), 1)


def test_ratio_parts_frozen():
    # For the shift n -> n - j with l = log(1 - j x^2):
    #   A = (x^-2 - j) l + j,   B = (e^(l/2) - 1)/x,   C = l.
    A, B, C = frame_ratio_parts(1, 6)
    assert A == PuiseuxSeries.from_terms({2: Rational(1, 2), 4: Rational(1, 6)}, 6)
    assert B == PuiseuxSeries.from_terms(
        {1: Rational(-1, 2), 3: Rational(-1, 8), 5: Rational(-1, 16)}, 6
    )
    assert C == PuiseuxSeries.from_terms({2: -1, 4: Rational(-1, 2)}, 6)
    A3, B3, C3 = frame_ratio_parts(3, 5)
    assert A3 == PuiseuxSeries.from_terms({2: Rational(9, 2), 4: Rational(9, 2)}, 5)
    assert B3 == PuiseuxSeries.from_terms({1: Rational(-3, 2), 3: Rational(-9, 8)}, 5)
    assert C3 == PuiseuxSeries.from_terms({2: -3, 4: Rational(-9, 2)}, 5)


def test_ratio_leading_coefficient_is_one(a85_fr):
    for j in (1, 2):
        phi = frame_ratio(a85_fr, j, 5)
        assert phi.valuation == j  # x^(2 beta j) with beta = 1/2
        assert phi.coefficient(j) == 1
        assert phi.truncation == 5 + j


def test_ratio_frozen_series(a85_fr):
    assert frame_ratio(a85_fr, 1, 5) == PuiseuxSeries.from_terms(
        {
            1: 1,
            2: Rational(-1, 2),
            3: Rational(3, 8),
            4: Rational(-13, 48),
            5: Rational(27, 128),
        },
        6,
    )
    assert frame_ratio(a85_fr, 2, 5) == PuiseuxSeries.from_terms(
        {
            2: 1,
            3: -1,
            4: Rational(3, 2),
            5: Rational(-5, 3),
            6: Rational(53, 24),
        },
        7,
    )


def test_ratio_is_kappa_independent(a85_fr):
    other = Frame(a85_fr.beta, a85_fr.c, a85_fr.alpha, "7/3")
    for j in (1, 2):
        assert frame_ratio(a85_fr, j, 8) == frame_ratio(other, j, 8)


def test_ratio_of_trivial_frame():
    fr = Frame(0, 0, 0, "5")
    assert frame_ratio(fr, 1, 4) == PuiseuxSeries.one(4)


def test_ratio_off_lattice_rejected():
    with pytest.raises(RamificationError):
        frame_ratio(Frame("1/3", 0, 0), 1, 5)


def test_ratio_matches_bigfloat_frame_quotient(a85_fr):
    # Independent numeric oracle: evaluate the series at x = 1/sqrt(1000)
    # and compare with F(n-j)/F(n) computed directly in mpmath.
    mpmath.mp.dps = 40
    try:
        n = 1000
        x = 1 / mpmath.sqrt(n)

        def F(m):
            m = mpmath.mpf(m)
            return mpmath.exp(
                (m * mpmath.log(m) - m) / 2
                + mpmath.sqrt(m)
                - mpmath.mpf(1) / 4
            )

        for j in (1, 2):
            s = frame_ratio(a85_fr, j, 24)
            val = mpmath.mpf(0)
            for k, c in s.terms():
                val += mpmath.mpf(int(c.numerator)) / int(c.denominator) * x**k
            truth = F(n - j) / F(n)
            assert abs(val - truth) / truth < mpmath.mpf(10) ** -30
    finally:
        mpmath.mp.dps = 15
