"""Shared exception types."""


class DmrepError(Exception):
    """Base class for package errors."""


class ShapePositionError(DmrepError):
    """Zero-dimensional ideal is not in shape position w.r.t. the chosen form."""


class MultiplePointError(DmrepError):
    """Eliminant has a repeated root; point multiplicities are not all one."""


class PositiveDimensionalError(DmrepError):
    """A branch ideal is not zero-dimensional (local rigidity fails there)."""


class BoldfaceAmbiguityError(DmrepError):
    """More than one field in a table row carries a signature-(2,1) form."""


class CertificationError(DmrepError):
    """An exact certificate check failed (relator not scalar, etc.)."""


class BudgetExceeded(DmrepError):
    """A step or time budget ran out mid-computation.

    Carries enough state to emit a resume token.
    """

    def __init__(self, message, *, steps=None, seconds=None, checkpoint=None):
        super().__init__(message)
        self.steps = steps
        self.seconds = seconds
        self.checkpoint = checkpoint or {}
