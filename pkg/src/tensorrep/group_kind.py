"""
Classical Group Kinds

Module: src.tensorrep.group_kind
Purpose: Which classical group acts on C^N, with its derived constants
Status: Complete
Created: 2026-10-17

For the orthogonal and symplectic groups N = 2n or 2n + 1 and the Brauer
parameter is ω = N or ω = -N. Indices of C^N are 0-based here: the
involution is i' = N - 1 - i, the symmetric form is g_ij = δ_{i j'} and the
skew form is g_ij = ε_i δ_{i j'} with ε_i = 1 for i < n and -1 otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from src.young.partition import Partition
from src.utils.exceptions import ShapeBoundError


class GroupFamily(str, Enum):
    """Supported classical groups."""
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    GENERAL_LINEAR = "general_linear"


@dataclass(frozen=True)
class GroupKind:
    """A classical group acting on C^N."""

    family: GroupFamily
    N: int

    def __post_init__(self):
        family = GroupFamily(self.family)
        object.__setattr__(self, "family", family)
        if self.N < 1:
            raise ValueError(f"N must be positive, got {self.N}")
        if family is not GroupFamily.GENERAL_LINEAR and self.N < 2:
            raise ValueError(f"{family.value} groups need N >= 2 (n = 0 is degenerate)")
        if family is GroupFamily.SYMPLECTIC and self.N % 2:
            raise ValueError(f"The symplectic group needs even N, got {self.N}")

    @classmethod
    def orthogonal(cls, N: int) -> "GroupKind":
        return cls(GroupFamily.ORTHOGONAL, N)

    @classmethod
    def symplectic(cls, N: int) -> "GroupKind":
        return cls(GroupFamily.SYMPLECTIC, N)

    @classmethod
    def general_linear(cls, N: int) -> "GroupKind":
        return cls(GroupFamily.GENERAL_LINEAR, N)

    # ------------------------------------------------------------------
    # Derived constants
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.N // 2

    @property
    def is_brauer(self) -> bool:
        """True for the groups whose centralizer is a Brauer algebra."""
        return self.family is not GroupFamily.GENERAL_LINEAR

    @property
    def epsilon(self) -> Fraction:
        """0 for o_2n, 1/2 for o_2n+1, 1 for sp_2n."""
        if self.family is GroupFamily.SYMPLECTIC:
            return Fraction(1)
        if self.family is GroupFamily.ORTHOGONAL:
            return Fraction(self.N % 2, 2)
        raise ValueError("ε is only defined for the orthogonal and symplectic groups")

    @property
    def omega(self) -> Optional[Fraction]:
        """ω = N (orthogonal), -N (symplectic), None (general linear)."""
        if self.family is GroupFamily.ORTHOGONAL:
            return Fraction(self.N)
        if self.family is GroupFamily.SYMPLECTIC:
            return Fraction(-self.N)
        return None

    @property
    def content_shift(self) -> Fraction:
        """(ω-1)/2, or 0 for the symmetric group contents."""
        return Fraction(0) if self.omega is None else (self.omega - 1) / 2

    def prime(self, i: int) -> int:
        return self.N - 1 - i

    def sign(self, i: int) -> int:
        return 1 if i < self.n else -1

    def form(self, i: int, j: int) -> int:
        """g_ij of the invariant bilinear form."""
        if j != self.N - 1 - i:
            return 0
        if self.family is GroupFamily.SYMPLECTIC:
            return self.sign(i)
        if self.family is GroupFamily.ORTHOGONAL:
            return 1
        raise ValueError("general_linear has no invariant bilinear form")

    # ------------------------------------------------------------------
    # Shape bounds
    # ------------------------------------------------------------------

    def shape_bound_ok(self, shape: Partition) -> bool:
        if self.family is GroupFamily.ORTHOGONAL:
            return shape.length <= self.n
        if self.family is GroupFamily.SYMPLECTIC:
            return shape[0] <= self.n
        return shape.length <= self.N

    def check_shape(self, shape: Partition) -> None:
        """
        Raises:
            ShapeBoundError: λ'_1 > n (orthogonal), λ_1 > n (symplectic) or ℓ(λ) > N
        """
        if self.shape_bound_ok(shape):
            return
        if self.family is GroupFamily.ORTHOGONAL:
            raise ShapeBoundError(
                f"Orthogonal N={self.N} needs λ'_1 <= n = {self.n}; λ = {shape} has {shape.length} rows"
            )
        if self.family is GroupFamily.SYMPLECTIC:
            raise ShapeBoundError(
                f"Symplectic N={self.N} needs λ_1 <= n = {self.n}; λ = {shape} has first row {shape[0]}"
            )
        raise ShapeBoundError(f"GL_{self.N} needs ℓ(λ) <= N; λ = {shape} has {shape.length} rows")

    def label(self) -> str:
        return {
            GroupFamily.ORTHOGONAL: f"O_{self.N}",
            GroupFamily.SYMPLECTIC: f"Sp_{self.N}",
            GroupFamily.GENERAL_LINEAR: f"GL_{self.N}",
        }[self.family]

    def __str__(self) -> str:
        return self.label()


__all__ = ["GroupFamily", "GroupKind"]
