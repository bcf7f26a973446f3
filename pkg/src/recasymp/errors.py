"""Exceptions raised by the series arithmetic, the expansion solver and the
numeric evaluator.

Every failure mode that a caller can trigger with legitimate input gets its
own class, so the command line tool can map each one to a stable exit code
and tests can assert on the precise cause.
"""


class RecasympError(Exception):
    """Base class for all errors raised by this package."""


class SeriesError(RecasympError):
    """Base class for errors in truncated Puiseux series arithmetic."""


class ZeroLeadingTerm(SeriesError):
    """Inversion of a series whose leading coefficient is zero
    (i.e. the zero series, which has no known nonzero term)."""


class NonPositiveValuation(SeriesError):
    """exp or log1p applied to a series with valuation <= 0; the result
    would not be a formal power series in the same variable."""


class NegativeValuation(SeriesError):
    """Shift substitution applied to a Laurent series with negative
    valuation; the substitution is only defined for power series."""


class EngineError(RecasympError):
    """Base class for errors raised while solving for an expansion."""


class RamificationError(EngineError):
    """The frame exponent beta makes some shift ratio x^(2*beta*j)
    leave the ramification-2 lattice (2*beta*j not an integer)."""


class FrameMismatch(EngineError):
    """At some order the residual has a forced nonzero coefficient that no
    choice of the current series coefficient can cancel: the frame
    (beta, c, alpha) does not belong to this recurrence."""

    def __init__(self, k: int, order: int, message: str = ""):
        self.k = k
        self.order = order
        super().__init__(
            message
            or f"residual coefficient at order {order} cannot be cancelled "
            f"while solving for coefficient {k}"
        )


class ResonantOrder(EngineError):
    """At some order both the forcing term and the linear response vanish,
    so the coefficient being solved for is a free parameter.  It is
    reported, never silently set."""

    def __init__(self, k: int, order: int, message: str = ""):
        self.k = k
        self.order = order
        super().__init__(
            message
            or f"coefficient {k} is undetermined at order {order} (resonance)"
        )


class FrameSolveError(EngineError):
    """Base class for failures of the automatic frame finder."""


class NoRationalRoot(FrameSolveError):
    """A frame equation has no rational solution (or does not reduce to a
    univariate rational equation at all): the stretched-exponential
    template does not cover this recurrence."""


class AmbiguousRoot(FrameSolveError):
    """A frame equation has more than one rational solution; the caller
    must pick a branch explicitly."""

    def __init__(self, candidates, message: str = ""):
        self.candidates = list(candidates)
        super().__init__(
            message
            or "frame equation has multiple rational roots: "
            + ", ".join(str(c) for c in self.candidates)
        )


class InputTooLarge(RecasympError):
    """A deliberately bounded routine (the brute-force involution counter)
    was asked for more than it is willing to do."""


class EvaluationError(RecasympError):
    """Base class for numeric evaluation failures."""


class PrecisionUnachievable(EvaluationError):
    """The requested number of correct digits cannot be certified with the
    working precision policy in effect."""


class TruncationDominates(EvaluationError):
    """The requested accuracy is below the truncation error floor of the
    expansion: no working precision can help, more series terms are
    needed."""

    def __init__(self, requested_digits: int, floor_digits: int, message: str = ""):
        self.requested_digits = requested_digits
        self.floor_digits = floor_digits
        super().__init__(
            message
            or f"truncation error limits accuracy to about {floor_digits} "
            f"digits, but {requested_digits} were requested"
        )
