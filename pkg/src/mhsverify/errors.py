"""Exception hierarchy shared across the package."""


class ExactError(Exception):
    """Base class for errors raised by the exact-arithmetic layer."""


class DivisionByZeroError(ExactError, ZeroDivisionError):
    """Division by a value that is provably zero."""


class UncertifiedNonzeroError(ExactError):
    """Division by an interval that still contains zero at maximum precision.

    Distinct from :class:`DivisionByZeroError`: the divisor is not known to
    be zero, it merely cannot be certified nonzero.
    """


class UncertifiedComparisonError(ExactError):
    """A comparison could not be certified at maximum working precision."""


class ScalarParseError(ExactError, ValueError):
    """Malformed scalar text."""


class PreconditionError(ValueError):
    """An operation was invoked on data violating its stated hypotheses."""


class IdentityCheckError(AssertionError):
    """An identity that is supposed to hold exactly failed to hold.

    Carries the offending residual(s) so callers can report them.
    """

    def __init__(self, message: str, residuals=()):
        super().__init__(message)
        self.residuals = tuple(residuals)
