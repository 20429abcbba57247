"""
Exception hierarchy.

DomainError marks a violated precondition (CLI exit code 1). InternalError
marks a broken invariant that the theory guarantees cannot happen, so it
always points at a bug (CLI exit code 2).
"""


class CrystalError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CrystalError, ValueError):
    """A precondition on the input does not hold."""


class InternalError(CrystalError, RuntimeError):
    """An invariant that should always hold was violated."""


class UniquenessError(InternalError):
    """f/e_geometric found zero or several qualifying components."""


class CalibrationError(InternalError):
    """The fast signature rule disagrees with the geometric operators."""


class BudgetExceededError(InternalError):
    """B(lambda) generation exceeded its node budget."""


class StabilityMismatchError(InternalError):
    """The fixpoint and kernel stability criteria disagree."""


class ConventionError(InternalError):
    """A multisegment could not be distributed into a semistandard tableau."""
