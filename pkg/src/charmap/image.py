"""
Characteristic Map Images

Module: src.charmap.image
Purpose: ChImage, the Schur expansion of ch(C) in the variables t_i = y_i^2
Status: Complete
Created: 2026-10-17
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.symfunc.schur import SchurExpansion
from src.tensorrep.group_kind import GroupKind
from src.utils.exceptions import DimensionMismatchError
from src.young.partition import Partition


@dataclass(frozen=True)
class ChImage:
    """ch of a central element for `shape`, expanded as Σ coeff·s_ν(y1^2, ..., yn^2)."""

    shape: Partition
    kind: GroupKind
    expansion: SchurExpansion

    def __post_init__(self):
        if self.expansion.n != self.kind.n:
            raise DimensionMismatchError(
                f"Expansion in {self.expansion.n} variables for {self.kind} (n = {self.kind.n})"
            )

    @classmethod
    def zero(cls, shape: Partition, kind: GroupKind) -> "ChImage":
        return cls(shape, kind, SchurExpansion(kind.n))

    @property
    def n(self) -> int:
        return self.kind.n

    def is_zero(self) -> bool:
        return self.expansion.is_zero()

    def coefficient(self, nu: Partition) -> Fraction:
        return self.expansion.coefficient(nu)

    def scaled(self, factor: Union[int, Fraction]) -> "ChImage":
        return ChImage(self.shape, self.kind, self.expansion.scaled(factor))

    def same_value(self, other: "ChImage") -> bool:
        """Equal expansions, ignoring the shape label."""
        return self.kind == other.kind and self.expansion.terms == other.expansion.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChImage):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.kind == other.kind
            and self.expansion.terms == other.expansion.terms
        )

    __hash__ = None

    def __str__(self) -> str:
        return f"ch[{self.shape}; {self.kind}] = {self.expansion}"


__all__ = ["ChImage"]
