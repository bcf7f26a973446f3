"""High-precision numeric evaluation of solved expansions.

The exact layer produces a frame F and correction coefficients a_k; turning
those into decimal digits of t_n means evaluating

    C * exp(beta*(n log n - n) + c*sqrt(n) + alpha*log n + kappa)
      * (1 + a_1 n^(-1/2) + ... + a_k n^(-k/2))

in big-float arithmetic.  Every call builds a private mpmath context, so
concurrent callers and nested precisions never interfere through global
state.  The working precision follows one policy: the requested digits,
plus ten guard digits, plus one digit for every decimal order of magnitude
of the exponent argument (exponentiation turns absolute error of the
argument into relative error of the result, so huge exponents eat digits).

Truncation error is a separate matter from rounding error: an expansion
truncated at k terms knows t_n to roughly (k+1)/2 * log10(n) digits and no
working precision can add more.  Asking for digits beyond that floor raises
TruncationDominates instead of returning confidently wrong output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath.ctx_mp import MPContext

from .engine import Expansion, solve_expansion
from .errors import PrecisionUnachievable, TruncationDominates
from .rationals import Rational, rat

#: Sentinel for the exact connection constant 1/sqrt(2); it is irrational,
#: so it cannot travel as a Rational and is materialised only at working
#: precision inside an evaluation.
INV_SQRT2 = object()

#: Working precisions beyond this are refused rather than attempted.
MAX_WORKING_DPS = 10**6

_GUARD_DIGITS = 10


def _exponent_argument(frame, n: int) -> float:
    """Cheap float estimate of beta*(n log n - n) + c*sqrt(n) + alpha*log n
    + kappa, used only to size the working precision."""
    log_n = math.log(n) if n > 1 else 0.0
    return (
        float(frame.beta) * (n * log_n - n)
        + float(frame.c) * math.sqrt(n)
        + float(frame.alpha) * log_n
        + float(frame.kappa)
    )


def working_dps(frame, n: int, digits: int) -> int:
    """The decimal working precision for evaluating at index n."""
    if digits < 1:
        raise ValueError("need at least one digit")
    magnitude = abs(_exponent_argument(frame, n))
    extra = math.ceil(math.log10(magnitude)) if magnitude >= 1.0 else 0
    dps = digits + _GUARD_DIGITS + max(0, extra)
    if dps > MAX_WORKING_DPS:
        raise PrecisionUnachievable(
            f"the evaluation would need {dps} working digits; "
            f"the supported maximum is {MAX_WORKING_DPS}"
        )
    return dps


def _fresh_context(dps: int) -> MPContext:
    ctx = MPContext()
    ctx.dps = dps
    return ctx


def _to_mpf(ctx, q):
    """Exact rational (or int) to mpf: one correctly-rounded division."""
    q = rat(q) if not isinstance(q, int) else Rational(q)
    return ctx.mpf(int(q.numerator)) / ctx.mpf(int(q.denominator))


def _resolve_constant(ctx, C):
    if C is INV_SQRT2:
        return 1 / ctx.sqrt(2)
    return _to_mpf(ctx, C)


def eval_expansion(exp: Expansion, C, n: int, k: int, digits: int):
    """C * F(n) * (1 + a_1 n^(-1/2) + ... + a_k n^(-k/2)) as a big float,
    where F is the frame of exp and C is a rational, an int, a 'p/q'
    string, or the INV_SQRT2 sentinel.

    k selects how many correction terms to use (k = 0 means the bare
    frame) and must not exceed exp.K; digits sizes the working precision.
    """
    if n < 1:
        raise ValueError("evaluation needs n >= 1")
    if not 0 <= k <= exp.K:
        raise ValueError(f"k must be between 0 and K = {exp.K}, got {k}")
    ctx = _fresh_context(working_dps(exp.frame, n, digits))
    fr = exp.frame
    log_n = ctx.log(n)
    sqrt_n = ctx.sqrt(n)
    argument = (
        _to_mpf(ctx, fr.beta) * (n * log_n - n)
        + _to_mpf(ctx, fr.c) * sqrt_n
        + _to_mpf(ctx, fr.alpha) * log_n
        + _to_mpf(ctx, fr.kappa)
    )
    frame_value = ctx.exp(argument)
    # Horner in n^(-1/2) over the exact coefficients, rounded once each.
    rx = 1 / sqrt_n
    s = _to_mpf(ctx, exp.coefficient(k)) if k else ctx.mpf(1)
    for i in range(k - 1, -1, -1):
        s = s * rx + _to_mpf(ctx, exp.coefficient(i))
    return _resolve_constant(ctx, C) * frame_value * s


def truncation_floor_digits(n: int, k: int) -> int:
    """How many digits of t_n an expansion truncated after k correction
    terms can support: the next omitted term is O(n^(-(k+1)/2))."""
    return max(0, math.floor((k + 1) / 2 * math.log10(n)) - 2)


@dataclass(frozen=True)
class RatioReport:
    """Outcome of comparing an expansion against the exact sequence."""

    n: int
    k: int
    asy: object
    exact: object
    ratio: object
    digits: int
    working_dps: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "asy": format_significant(self.asy, self.digits),
            "ratio": format_significant(self.ratio, self.digits),
            "digits": self.digits,
        }


def ratio_check(n: int, k: int, digits: int, *, expansion: Expansion | None = None) -> RatioReport:
    """Evaluate the involution-number expansion with k correction terms at
    index n and divide by the exact t_n.

    The expansion is solved on the spot unless a sufficiently long one is
    passed in; the exact value comes from the integer recurrence, so the
    ratio measures the asymptotic error alone.
    """
    from .involutions import involution_numbers
    from .presets import a85_frame, a85_recurrence

    if expansion is None:
        expansion = solve_expansion(a85_recurrence(), a85_frame(), k)
    asy = eval_expansion(expansion, INV_SQRT2, n, k, digits)
    exact_int = involution_numbers(n)[n]
    ctx = _fresh_context(working_dps(expansion.frame, n, digits))
    exact = ctx.mpf(exact_int)
    ratio = asy / exact
    return RatioReport(
        n=n,
        k=k,
        asy=asy,
        exact=exact,
        ratio=ratio,
        digits=digits,
        working_dps=ctx.dps,
    )


def connection_constant(rec, exp: Expansion, n: int, k: int, digits: int):
    """Estimate the connection constant C = t_n / (F(n) * S_k(n)) to the
    requested number of digits.

    Only meaningful where exact sequence values exist, i.e. for the
    involution recurrence; raises TruncationDominates when the expansion
    is too short to support the requested digits at this n.
    """
    from .involutions import involution_numbers
    from .presets import a85_recurrence

    if rec != a85_recurrence():
        raise ValueError(
            "exact sequence values are only available for the involution "
            "recurrence; cannot estimate a connection constant"
        )
    floor = truncation_floor_digits(n, k)
    if digits > floor:
        raise TruncationDominates(digits, floor)
    denominator = eval_expansion(exp, 1, n, k, digits)
    ctx = _fresh_context(working_dps(exp.frame, n, digits))
    return ctx.mpf(involution_numbers(n)[n]) / denominator


def format_significant(x, digits: int) -> str:
    """Render x to exactly `digits` significant decimal digits.

    Small magnitudes print fixed ("1.0001...", "0.70710..."), large or tiny
    ones print normalized scientific with a bare integer exponent
    ("2.1441496003431008422e1296").  Deterministic: same value and digits,
    same string.
    """
    if digits < 1:
        raise ValueError("need at least one digit")
    if x == 0:
        return "0"
    rendered = mpmath.nstr(
        x, digits, strip_zeros=False, min_fixed=1, max_fixed=0
    )
    sign = ""
    if rendered.startswith("-"):
        sign, rendered = "-", rendered[1:]
    mantissa, _, exponent = rendered.partition("e")
    if exponent:
        e = int(exponent)
    else:
        # mpmath still prints magnitude-one values fixed; recover the
        # decimal exponent from the dot position.
        dot = mantissa.find(".")
        e = (dot - 1) if dot >= 0 else (len(mantissa) - 1)
    body = mantissa.replace(".", "")
    # mpmath may round 9.99... up to a shorter mantissa like "10.0".
    if len(body) > digits:
        e += len(body) - digits
        body = body[:digits]
    body = body.ljust(digits, "0")
    if -4 <= e < 0:
        return sign + "0." + "0" * (-e - 1) + body
    if 0 <= e < digits:
        head, tail = body[: e + 1], body[e + 1 :]
        return sign + head + ("." + tail if tail else "")
    tail = body[1:]
    return f"{sign}{body[0]}{'.' + tail if tail else ''}e{e}"
