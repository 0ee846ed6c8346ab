"""Exception hierarchy.

The CLI maps each family to its own exit status, so callers can tell a
malformed input apart from a well-formed input that violates a
mathematical precondition.
"""


class MilnorHodgeError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(MilnorHodgeError, ValueError):
    """Input parsed but does not match the expected structure."""


class PreconditionError(MilnorHodgeError, ValueError):
    """A mathematical precondition of an operation is violated."""


class InexactDivisionError(PreconditionError):
    """Exact division of fractional-exponent polynomials left a remainder."""


class PoleError(PreconditionError, ZeroDivisionError):
    """Evaluation of a Laurent polynomial at y = 0 hit a negative power."""


class DimensionMismatchError(PreconditionError):
    pass


class StratificationError(PreconditionError):
    """Stratification data is incomplete or its order relation is cyclic."""
