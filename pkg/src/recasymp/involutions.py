"""Exact big-integer counts of involutions (self-inverse permutations).

t_n counts permutations of n letters equal to their own inverse.  Four
independent routes are provided so they can cross-check each other:

  * the two-term recurrence t_n = t_{n-1} + (n-1) t_{n-2}, the fast route
    used everywhere else in the package;
  * the closed-form sum over the number of 2-cycles;
  * the exponential generating function exp(z + z^2/2), built as the
    product of two separately expanded factors;
  * brute-force enumeration of all permutations, for tiny n.

Everything here is exact integer or rational arithmetic; there is nothing
to round.  The sequence grows like n^(n/2) e^(-n/2 + sqrt(n)), so lists for
n in the thousands hold integers with thousands of digits and are still
cheap to produce.
"""

from __future__ import annotations

from itertools import permutations

from .errors import InputTooLarge
from .rationals import Rational

#: Hard cap for the factorial-time brute-force counter (10! is 3628800).
BRUTE_FORCE_LIMIT = 10


def involution_numbers(n_max: int) -> list[int]:
    """[t_0, t_1, ..., t_{n_max}] via the two-term recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    out = [1]
    if n_max >= 1:
        out.append(1)
    for n in range(2, n_max + 1):
        out.append(out[n - 1] + (n - 1) * out[n - 2])
    return out


def involution_count_by_sum(n: int) -> int:
    """t_n as the sum over k of n! / (k! * 2^k * (n-2k)!), where k counts
    the 2-cycles; the k = 0 term contributes the identity permutation."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    term = 1  # n! / (0! * 2^0 * n!)
    for k in range(n // 2 + 1):
        total += term
        # term_{k+1} / term_k = (n-2k)(n-2k-1) / (2(k+1)), exact each step
        num = (n - 2 * k) * (n - 2 * k - 1)
        den = 2 * (k + 1)
        term, rem = divmod(term * num, den)
        assert rem == 0
    return total


def involution_counts_by_egf(n_max: int) -> list[int]:
    """[t_0, ..., t_{n_max}] from the EGF exp(z) * exp(z^2/2).

    The two exponentials are expanded separately from their factorial
    formulas and convolved with exact rationals; multiplying coefficient m
    by m! must land on an integer, and anything else is an internal error.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    size = n_max + 1
    # exp(z): 1/m!
    a = []
    f = 1
    for m in range(size):
        if m:
            f *= m
        a.append(Rational(1, f))
    # exp(z^2/2): z^(2m) / (2^m m!)
    b = [Rational(0)] * size
    g = 1
    p = 1
    for m in range(0, size, 2):
        b[m] = Rational(1, g * p)
        g *= (m // 2) + 1
        p *= 2
    out = []
    fact = 1
    for m in range(size):
        if m:
            fact *= m
        c = sum((a[i] * b[m - i] for i in range(m + 1)), Rational(0))
        value = c * fact
        assert value.denominator == 1, "EGF coefficient times m! must be integral"
        out.append(int(value))
    return out


def involution_count_brute(n: int) -> int:
    """t_n by exhaustively checking every permutation of n letters for
    equality with its own inverse.  Factorial time; refuses n above
    BRUTE_FORCE_LIMIT instead of hanging."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > BRUTE_FORCE_LIMIT:
        raise InputTooLarge(
            f"brute-force involution count is capped at n = {BRUTE_FORCE_LIMIT}, "
            f"got n = {n}"
        )
    idx = range(n)
    return sum(1 for p in permutations(idx) if all(p[p[i]] == i for i in idx))
