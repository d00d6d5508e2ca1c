"""
Domain Exceptions

Module: src.utils.exceptions
Purpose: Error categories raised by the computation packages
Status: Complete
Created: 2026-10-17

Every error derives from ValueError or RuntimeError. Division by a zero
rational raises the built-in ZeroDivisionError.
"""


class DimensionMismatchError(ValueError):
    """Operands have incompatible sizes (matrices, vectors, diagrams)."""


class IndexRangeError(ValueError):
    """A generator, Jucys-Murphy or tensor-slot index is out of range."""


class ShapeBoundError(ValueError):
    """A partition violates the row/column bound required by the group."""


class OmegaMismatchError(ValueError):
    """A Brauer element does not match the parameter of the representation."""


class SizeGuardError(ValueError):
    """The tensor space N^m exceeds the configured maximum dimension."""


class NotSymmetricError(ValueError):
    """A polynomial expected to be symmetric is not."""


class SpectrumError(RuntimeError):
    """
    The exact spectrum of a Jucys-Murphy operator is not what the
    idempotent recurrence needs (no split, repeated root, missing content).
    """


__all__ = [
    "DimensionMismatchError",
    "IndexRangeError",
    "ShapeBoundError",
    "OmegaMismatchError",
    "SizeGuardError",
    "NotSymmetricError",
    "SpectrumError",
]
