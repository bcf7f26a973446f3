"""Linear recurrences with integer polynomial coefficients.

A recurrence of order d is

    p_0(n) t_n + p_1(n) t_{n-1} + ... + p_d(n) t_{n-d} = 0,

stored as d + 1 integer coefficient lists in ascending powers of n.  The
leading and trailing polynomials must be nonzero so the order is genuine;
interior polynomials may vanish.
"""

from __future__ import annotations

from .rationals import Rational
from .series import PuiseuxSeries


def _normalize_poly(coeffs) -> tuple[int, ...]:
    out = []
    for c in coeffs:
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"polynomial coefficients must be ints, got {c!r}")
        out.append(c)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_degree(p: tuple[int, ...]) -> int:
    """Degree of a normalized polynomial; -1 for the zero polynomial."""
    return len(p) - 1


def poly_eval(p: tuple[int, ...], n: int) -> int:
    value = 0
    for c in reversed(p):
        value = value * n + c
    return value


class Recurrence:
    """Immutable recurrence p_0(n) t_n + ... + p_d(n) t_{n-d} = 0."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs):
        polys = tuple(_normalize_poly(p) for p in coeffs)
        if len(polys) < 2:
            raise ValueError("a recurrence needs order >= 1 (at least two polynomials)")
        if not polys[0]:
            raise ValueError("leading polynomial p_0 must not be identically zero")
        if not polys[-1]:
            raise ValueError("trailing polynomial p_d must not be identically zero")
        object.__setattr__(self, "order", len(polys) - 1)
        object.__setattr__(self, "coeffs", polys)

    def __setattr__(self, name, value):
        raise AttributeError("Recurrence is immutable")

    def __eq__(self, other):
        if not isinstance(other, Recurrence):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Recurrence(order={self.order}, coeffs={[list(p) for p in self.coeffs]})"

    def active_shifts(self):
        """Iterate (j, p_j) over the nonzero coefficient polynomials."""
        for j, p in enumerate(self.coeffs):
            if p:
                yield j, p

    def sequence_residual(self, values, n: int) -> int:
        """sum_j p_j(n) * values[n - j]; zero iff the recurrence holds
        at index n for the given sequence prefix."""
        if n < self.order:
            raise ValueError(f"need n >= order = {self.order}")
        return sum(poly_eval(p, n) * values[n - j] for j, p in self.active_shifts())

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [list(p) for p in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Recurrence":
        coeffs = data["coeffs"]
        rec = cls(coeffs)
        if "order" in data and int(data["order"]) != rec.order:
            raise ValueError(
                f"declared order {data['order']} does not match "
                f"{len(coeffs) - 1} coefficient polynomials"
            )
        return rec


def poly_to_laurent(p, truncation: int) -> PuiseuxSeries:
    """The polynomial p(n) as a Laurent series in x = n^(-1/2): each n^i
    becomes x^(-2i).  Exact, so only the requested truncation bounds it."""
    terms = {}
    for i, c in enumerate(p):
        if c:
            terms[-2 * i] = Rational(c)
    return PuiseuxSeries.from_terms(terms, truncation)
