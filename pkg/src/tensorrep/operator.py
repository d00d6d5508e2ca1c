"""
Tensor Operators

Module: src.tensorrep.operator
Purpose: Operators on (C^N)^⊗m, the multi-index encoding and partial traces
Status: Complete
Created: 2026-10-17

A basis vector e_{i1} ⊗ ... ⊗ e_{im} (0-based i's) has index
i1·N^(m-1) + ... + im: row-major base N, leftmost factor most significant.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterable, List, Tuple

from src.exactmath.sparse import SparseMatrix
from src.utils.constants import DEFAULT_MAX_DIMENSION
from src.utils.exceptions import DimensionMismatchError, IndexRangeError, SizeGuardError

logger = logging.getLogger(__name__)

ENCODING = "row-major base N"


def check_size(N: int, m: int, max_dimension: int = DEFAULT_MAX_DIMENSION, force_large: bool = False) -> int:
    """
    Return N^m, refusing sizes above max_dimension unless forced.

    Raises:
        SizeGuardError: N^m > max_dimension and not force_large
    """
    size = N ** m
    if size > max_dimension:
        if not force_large:
            raise SizeGuardError(
                f"Tensor space N^m = {N}^{m} = {size} exceeds the limit {max_dimension} "
                f"(use --force-large to override)"
            )
        logger.warning("Building a %d-dimensional tensor space (limit %d overridden)", size, max_dimension)
    return size


def encode(indices: Iterable[int], N: int) -> int:
    index = 0
    for i in indices:
        index = index * N + i
    return index


def decode(index: int, N: int, m: int) -> Tuple[int, ...]:
    digits = [0] * m
    for position in range(m - 1, -1, -1):
        index, digits[position] = divmod(index, N)
    return tuple(digits)


def extend_matrix(matrix: SparseMatrix, N: int) -> SparseMatrix:
    """A ⊗ 1 on one more tensor factor (appended on the right)."""
    rows = {}
    for r, row in matrix.rows():
        for k in range(N):
            rows[r * N + k] = {c * N + k: value for c, value in row.items()}
    return SparseMatrix.from_rows(matrix.dim * N, rows)


@dataclass(frozen=True)
class TensorOperator:
    """An N^m x N^m matrix acting on the m-th tensor power of C^N."""

    N: int
    m: int
    matrix: SparseMatrix

    def __post_init__(self):
        if self.matrix.dim != self.N ** self.m:
            raise DimensionMismatchError(
                f"Matrix of size {self.matrix.dim} is not N^m = {self.N}^{self.m}"
            )

    @classmethod
    def identity(cls, N: int, m: int, scale: Any = 1) -> "TensorOperator":
        return cls(N, m, SparseMatrix.identity(N ** m, scale))

    @classmethod
    def zero(cls, N: int, m: int) -> "TensorOperator":
        return cls(N, m, SparseMatrix(N ** m))

    @property
    def dimension(self) -> int:
        return self.matrix.dim

    def _check(self, other: "TensorOperator") -> None:
        if (other.N, other.m) != (self.N, self.m):
            raise DimensionMismatchError(
                f"Operators on (C^{self.N})^⊗{self.m} and (C^{other.N})^⊗{other.m}"
            )

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        return TensorOperator(self.N, self.m, self.matrix @ other.matrix)

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        return TensorOperator(self.N, self.m, self.matrix + other.matrix)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        return TensorOperator(self.N, self.m, self.matrix - other.matrix)

    def __neg__(self) -> "TensorOperator":
        return self.scale(-1)

    def scale(self, factor: Any) -> "TensorOperator":
        return TensorOperator(self.N, self.m, self.matrix.scale(factor))

    def __mul__(self, factor: Any) -> "TensorOperator":
        if isinstance(factor, TensorOperator):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.N, self.m) == (other.N, other.m) and self.matrix == other.matrix

    __hash__ = None

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def commutes_with(self, other: "TensorOperator") -> bool:
        self._check(other)
        return self.matrix.commutes_with(other.matrix)

    def trace(self) -> Any:
        return self.matrix.trace()

    def partial_trace(self, slot: int) -> "TensorOperator":
        """
        tr_slot: trace over the slot-th tensor factor (1-based).

        Raises:
            IndexRangeError: slot outside 1..m
        """
        if not 1 <= slot <= self.m:
            raise IndexRangeError(f"Partial trace slot {slot} outside 1..{self.m}")
        N = self.N
        weight = N ** (self.m - slot)
        block = weight * N
        rows = {}
        for r, row in self.matrix.rows():
            r_digit = (r // weight) % N
            r_reduced = (r // block) * weight + r % weight
            for c, value in row.items():
                if (c // weight) % N != r_digit:
                    continue
                c_reduced = (c // block) * weight + c % weight
                target = rows.setdefault(r_reduced, {})
                target[c_reduced] = target.get(c_reduced, 0) + value
        cleaned = {}
        for r, row in rows.items():
            kept = {c: v for c, v in row.items() if v}
            if kept:
                cleaned[r] = kept
        return TensorOperator(N, self.m - 1, SparseMatrix.from_rows(N ** (self.m - 1), cleaned))

    def multiple_partial_trace(self, slots: Iterable[int]) -> "TensorOperator":
        """Trace out several factors (1-based slots of this operator)."""
        result = self
        for slot in sorted(set(slots), reverse=True):
            result = result.partial_trace(slot)
        return result

    def extend(self) -> "TensorOperator":
        """self ⊗ 1 on (C^N)^⊗(m+1)."""
        return TensorOperator(self.N, self.m + 1, extend_matrix(self.matrix, self.N))

    def to_triples(self) -> List[Tuple[int, int, Any]]:
        """Sorted (row, col, value) triples."""
        return self.matrix.items()


__all__ = ["ENCODING", "TensorOperator", "check_size", "decode", "encode", "extend_matrix"]
