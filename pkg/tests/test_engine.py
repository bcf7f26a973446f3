"""The order-by-order expansion solver and its residual certificate."""

import mpmath
import pytest

from recasymp import (
    Expansion,
    Frame,
    FrameMismatch,
    PuiseuxSeries,
    RamificationError,
    Rational,
    Recurrence,
    ResonantOrder,
    residual_check,
    solve_expansion,
)

# First ten correction coefficients of the involution-number expansion;
# a_1..a_5 are classical, the rest are pinned from the exact solver and
# certified by residual_check (exact re-substitution) below.
A85_COEFFS = [
    "7/24",
    "-119/1152",
    "-7933/414720",
    "1967381/39813120",
    "-57200419/1337720832",
    "6340449533/687970713600",
    "3840755481827/115579079884800",
    "-1165106617342939/22191183337881600",
    "10362392814297883973/263631258054033408000",
    "1683008269760589544489/88580102706155225088000",
]


def as_rational(text):
    num, _, den = text.partition("/")
    return Rational(int(num), int(den or 1))


def test_solve_matches_frozen_coefficients(a85_k10):
    assert list(a85_k10.a) == [as_rational(t) for t in A85_COEFFS]


def test_solve_is_deterministic(a85, a85_fr, a85_k10):
    again = solve_expansion(a85, a85_fr, 10)
    assert again == a85_k10
    assert again.a == a85_k10.a


def test_solve_k_zero(a85, a85_fr):
    exp = solve_expansion(a85, a85_fr, 0)
    assert exp.K == 0
    assert exp.a == ()
    with pytest.raises(ValueError):
        solve_expansion(a85, a85_fr, -1)


def test_kappa_never_changes_coefficients(a85, a85_fr, a85_k10):
    for kappa in ("0", "3", "-22/7"):
        fr = Frame(a85_fr.beta, a85_fr.c, a85_fr.alpha, kappa)
        assert solve_expansion(a85, fr, 10).a == a85_k10.a


def test_scale_invariance_constant(a85, a85_fr, a85_k10):
    scaled = Recurrence([[7 * c for c in p] for p in a85.coeffs])
    assert solve_expansion(scaled, a85_fr, 10).a == a85_k10.a


def test_scale_invariance_polynomial(a85, a85_fr, a85_k10):
    # Multiply every p_j by (n + 3): same solution space, higher degrees.
    def times_n_plus_3(p):
        out = [0] * (len(p) + 1)
        for i, c in enumerate(p):
            out[i] += 3 * c
            out[i + 1] += c
        return out

    scaled = Recurrence([times_n_plus_3(list(p)) for p in a85.coeffs])
    assert solve_expansion(scaled, a85_fr, 10).a == a85_k10.a


def test_wrong_c_is_frame_mismatch(a85):
    with pytest.raises(FrameMismatch) as info:
        solve_expansion(a85, Frame("1/2", "0", "0"), 1)
    assert info.value.k == 1


def test_wrong_beta_off_lattice(a85):
    with pytest.raises(RamificationError):
        solve_expansion(a85, Frame("1/3", "1", "0"), 1)


def test_resonance_is_reported():
    # p_0 = n^2 - n, p_1 = -2n^2 + 4n - 2, p_2 = n^2 - 3n + 2 annihilates
    # both 1 and 1/n: with the zero frame, a_2 multiplies an identically
    # vanishing response (the 1/n solution), so it is a free parameter.
    rec = Recurrence([[0, -1, 1], [-2, 4, -2], [2, -3, 1]])
    fr = Frame(0, 0, 0)
    assert solve_expansion(rec, fr, 1).a == (Rational(0),)
    with pytest.raises(ResonantOrder) as info:
        solve_expansion(rec, fr, 2)
    assert info.value.k == 2


def test_factorial_recurrence_gives_stirling_series():
    # t_n = n t_{n-1} (factorials): the correction series must be the
    # classical Stirling series 1 + 1/(12n) + 1/(288n^2) - 139/(51840n^3).
    fact = Recurrence([[1], [0, -1]])
    exp = solve_expansion(fact, Frame(1, 0, "1/2"), 6)
    assert list(exp.a) == [
        0,
        Rational(1, 12),
        0,
        Rational(1, 288),
        0,
        Rational(-139, 51840),
    ]
    assert residual_check(fact, exp) >= 6


def test_reciprocal_factorial_is_reciprocal_series():
    # 1/n! satisfies n t_n - t_{n-1} = 0; its frame is the negation of the
    # factorial frame and its correction series the exact reciprocal.
    fact = solve_expansion(Recurrence([[1], [0, -1]]), Frame(1, 0, "1/2"), 6)
    recip = solve_expansion(Recurrence([[0, 1], [-1]]), Frame(-1, 0, "-1/2"), 6)
    assert recip.coefficient(2) == Rational(-1, 12)
    product = fact.correction_series() * recip.correction_series()
    assert product == PuiseuxSeries.one(7)


def test_factorial_expansion_against_bigfloat_factorial():
    # Independent end-to-end oracle: sqrt(2 pi) F(n) S(n) ~ n! with the
    # known connection constant, checked in plain mpmath arithmetic.
    exp = solve_expansion(Recurrence([[1], [0, -1]]), Frame(1, 0, "1/2"), 6)
    mpmath.mp.dps = 30
    try:
        for n in (25, 100):
            f = mpmath.exp(n * mpmath.log(n) - n + mpmath.log(n) / 2)
            s = mpmath.mpf(1)
            for k in range(1, 7):
                c = exp.coefficient(k)
                s += mpmath.mpf(int(c.numerator)) / int(c.denominator) * mpmath.mpf(n) ** (
                    -mpmath.mpf(k) / 2
                )
            ratio = mpmath.sqrt(2 * mpmath.pi) * f * s / mpmath.factorial(n)
            assert abs(ratio - 1) < mpmath.mpf(n) ** (-3.5)
    finally:
        mpmath.mp.dps = 15


# -- residual certificate -----------------------------------------------------


def test_residual_check_certifies_solution(a85, a85_k10):
    assert residual_check(a85, a85_k10) >= 10


def test_residual_check_catches_corrupted_first_coefficient(a85, a85_k10):
    bad = Expansion(a85_k10.frame, 1, [Rational(7, 25)])
    assert residual_check(a85, bad) == 0


def test_residual_check_localizes_corruption(a85, a85_k10):
    a = list(a85_k10.a[:5])
    a[2] = a[2] + 1
    assert residual_check(a85, Expansion(a85_k10.frame, 5, a)) == 2


def test_residual_check_on_bare_frame(a85, a85_fr):
    assert residual_check(a85, Expansion(a85_fr, 0, [])) >= 0


# -- the Expansion container ---------------------------------------------------


def test_expansion_coefficient_access(a85_k10):
    assert a85_k10.coefficient(0) == 1
    assert a85_k10.coefficient(1) == Rational(7, 24)
    with pytest.raises(ValueError):
        a85_k10.coefficient(11)
    with pytest.raises(ValueError):
        a85_k10.coefficient(-1)


def test_expansion_correction_series(a85_k10):
    s = a85_k10.correction_series()
    assert s.valuation == 0
    assert s.truncation == 11
    assert s.coefficient(0) == 1
    assert s.coefficient(1) == Rational(7, 24)


def test_expansion_truncated(a85_k10):
    short = a85_k10.truncated(3)
    assert short.K == 3
    assert short.a == a85_k10.a[:3]
    assert short.frame == a85_k10.frame
    with pytest.raises(ValueError):
        a85_k10.truncated(11)


def test_expansion_validation(a85_fr):
    with pytest.raises(ValueError):
        Expansion(a85_fr, 2, [Rational(1)])
    with pytest.raises(ValueError):
        Expansion(a85_fr, -1, [])
    exp = Expansion(a85_fr, 1, [Rational(7, 24)])
    with pytest.raises(AttributeError):
        exp.K = 5


def test_expansion_json_round_trip(a85, a85_fr):
    exp = solve_expansion(a85, a85_fr, 2)
    data = exp.to_json_dict()
    assert data == {
        "frame": {"beta": "1/2", "c": "1", "alpha": "0", "kappa": "-1/4"},
        "K": 2,
        "a": ["7/24", "-119/1152"],
    }
    assert Expansion.from_json_dict(data) == exp
