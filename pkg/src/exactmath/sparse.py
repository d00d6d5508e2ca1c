"""
Exact Sparse Matrices

Module: src.exactmath.sparse
Purpose: Square sparse matrices with exact entries and Krylov minimal polynomials
Status: Complete
Created: 2026-10-17

Entries live in a row-major dict of dicts ({row: {col: value}}) holding no
zeros. Values may be ints, Fractions or MultiPoly instances: the code only
relies on +, * and truthiness, so the same class carries integer work
matrices, rational projectors and symbolic diagonals. Matrices are treated
as immutable values; every operation builds a new one.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from src.exactmath.unipoly import UniPoly
from src.utils.exceptions import DimensionMismatchError, IndexRangeError

logger = logging.getLogger(__name__)

Vector = Dict[int, Any]
Rows = Dict[int, Dict[int, Any]]


class SparseMatrix:
    """Square matrix stored as {row: {col: nonzero value}}."""

    __slots__ = ("_dim", "_rows")

    def __init__(self, dim: int, entries: Mapping[Tuple[int, int], Any] = None):
        """
        Args:
            dim: Side length (positive)
            entries: (row, col) -> value; zeros are dropped

        Raises:
            ValueError: dim < 1
            IndexRangeError: An index outside 0..dim-1
        """
        if dim < 1:
            raise ValueError(f"Matrix dimension must be positive, got {dim}")
        self._dim = dim
        self._rows: Rows = {}
        for (row, col), value in (entries or {}).items():
            if not (0 <= row < dim and 0 <= col < dim):
                raise IndexRangeError(f"Entry ({row}, {col}) outside a {dim}x{dim} matrix")
            if value:
                self._rows.setdefault(row, {})[col] = value

    @classmethod
    def from_rows(cls, dim: int, rows: Rows) -> "SparseMatrix":
        """Adopt a prepared row map (no zeros, indices in range) without copying."""
        matrix = cls.__new__(cls)
        matrix._dim = dim
        matrix._rows = rows
        return matrix

    @classmethod
    def identity(cls, dim: int, scale: Any = 1) -> "SparseMatrix":
        if not scale:
            return cls(dim)
        return cls.from_rows(dim, {i: {i: scale} for i in range(dim)})

    @classmethod
    def diagonal(cls, values: List[Any]) -> "SparseMatrix":
        return cls.from_rows(len(values), {i: {i: v} for i, v in enumerate(values) if v})

    @classmethod
    def from_dense(cls, rows: List[List[Any]]) -> "SparseMatrix":
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise DimensionMismatchError("Dense input is not square")
        return cls(dim, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def get(self, row: int, col: int) -> Any:
        return self._rows.get(row, {}).get(col, 0)

    def row(self, row: int) -> Dict[int, Any]:
        return dict(self._rows.get(row, {}))

    def column(self, col: int) -> Vector:
        return {i: r[col] for i, r in self._rows.items() if col in r}

    def rows(self) -> Iterator[Tuple[int, Dict[int, Any]]]:
        """Iterate (row, {col: value}) in ascending row order; do not mutate."""
        for index in sorted(self._rows):
            yield index, self._rows[index]

    def items(self) -> List[Tuple[int, int, Any]]:
        """Sorted (row, col, value) triples."""
        return [
            (i, j, self._rows[i][j])
            for i in sorted(self._rows)
            for j in sorted(self._rows[i])
        ]

    def diagonal_entries(self) -> Dict[int, Any]:
        return {i: row[i] for i, row in self._rows.items() if i in row}

    def trace(self) -> Any:
        total = 0
        for value in self.diagonal_entries().values():
            total = total + value
        return total

    def is_zero(self) -> bool:
        return not self._rows

    def to_dense(self) -> List[List[Any]]:
        dense = [[0] * self._dim for _ in range(self._dim)]
        for i, j, value in self.items():
            dense[i][j] = value
        return dense

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, other: "SparseMatrix") -> None:
        if not isinstance(other, SparseMatrix):
            raise TypeError(f"Expected SparseMatrix, got {type(other).__name__}")
        if other._dim != self._dim:
            raise DimensionMismatchError(
                f"Matrix dimensions differ: {self._dim} vs {other._dim}"
            )

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        rows = {i: dict(r) for i, r in self._rows.items()}
        for i, orow in other._rows.items():
            target = rows.setdefault(i, {})
            for j, value in orow.items():
                total = target.get(j, 0) + value
                if total:
                    target[j] = total
                else:
                    target.pop(j, None)
            if not target:
                del rows[i]
        return SparseMatrix.from_rows(self._dim, rows)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, factor: Any) -> "SparseMatrix":
        if not factor:
            return SparseMatrix(self._dim)
        return self.map(lambda value: value * factor)

    def __mul__(self, factor: Any) -> "SparseMatrix":
        if isinstance(factor, SparseMatrix):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        """Exact product; zero results are dropped."""
        self._check(other)
        orows = other._rows
        rows: Rows = {}
        for i, arow in self._rows.items():
            acc: Dict[int, Any] = {}
            for k, a in arow.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                rows[i] = acc
        return SparseMatrix.from_rows(self._dim, rows)

    def map(self, fn: Callable[[Any], Any]) -> "SparseMatrix":
        """Apply fn entrywise to the stored entries (fn(0) is assumed 0)."""
        rows: Rows = {}
        for i, row in self._rows.items():
            mapped = {j: fn(v) for j, v in row.items()}
            mapped = {j: v for j, v in mapped.items() if v}
            if mapped:
                rows[i] = mapped
        return SparseMatrix.from_rows(self._dim, rows)

    def transpose(self) -> "SparseMatrix":
        rows: Rows = {}
        for i, row in self._rows.items():
            for j, value in row.items():
                rows.setdefault(j, {})[i] = value
        return SparseMatrix.from_rows(self._dim, rows)

    def apply(self, vector: Mapping[int, Any]) -> Vector:
        """Matrix-vector product for a sparse vector {index: value}."""
        result: Vector = {}
        for i, row in self._rows.items():
            total = 0
            for j, value in row.items():
                entry = vector.get(j)
                if entry:
                    total = total + value * entry
            if total:
                result[i] = total
        return result

    def evaluate_polynomial(self, poly: UniPoly) -> "SparseMatrix":
        """poly(A) by Horner's rule."""
        result = SparseMatrix(self._dim)
        for coeff in reversed(poly.coeffs):
            result = (result @ self) + SparseMatrix.identity(self._dim, coeff)
        return result

    def commutes_with(self, other: "SparseMatrix") -> bool:
        return self @ other == other @ self

    def primitive_part(self) -> Tuple[Fraction, "SparseMatrix"]:
        """
        Split a rational matrix as content * integer matrix with coprime
        entries (content 1 for the zero matrix).
        """
        denominators = 1
        for row in self._rows.values():
            for value in row.values():
                d = Fraction(value).denominator
                denominators = denominators * d // gcd(denominators, d)
        common = 0
        for row in self._rows.values():
            for value in row.values():
                common = gcd(common, int(value * denominators))
        if common == 0:
            return Fraction(1), self
        content = Fraction(common, denominators)
        scale = Fraction(denominators, common)
        return content, self.map(lambda value: int(value * scale))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self._dim == other._dim and self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"SparseMatrix(dim={self._dim}, nnz={self.nnz})"


# ----------------------------------------------------------------------
# Krylov minimal polynomials
# ----------------------------------------------------------------------


def _apply_polynomial(matrix: SparseMatrix, poly: UniPoly, vector: Vector) -> Vector:
    """poly(A) v by Horner's rule on vectors."""
    result: Vector = {}
    for coeff in reversed(poly.coeffs):
        result = matrix.apply(result)
        if coeff:
            for index, value in vector.items():
                total = result.get(index, 0) + coeff * value
                if total:
                    result[index] = total
                else:
                    result.pop(index, None)
    return result


def vector_minimal_polynomial(matrix: SparseMatrix, vector: Mapping[int, Any]) -> UniPoly:
    """
    Monic polynomial p of least degree with p(A) v = 0.

    Builds v, Av, A^2 v, ... and reduces each new power against the
    echelon basis of the earlier ones; the first dependency gives p.
    """
    basis: List[Tuple[int, Vector, UniPoly]] = []
    power: Vector = {k: Fraction(v) for k, v in vector.items() if v}
    if not power:
        return UniPoly.one()
    degree = 0
    while True:
        reduced = dict(power)
        combo = UniPoly([0] * degree + [1])
        for pivot, vec, poly in basis:
            factor = reduced.get(pivot)
            if not factor:
                continue
            for index, value in vec.items():
                total = reduced.get(index, 0) - factor * value
                if total:
                    reduced[index] = total
                else:
                    reduced.pop(index, None)
            combo = combo - poly * factor
        if not reduced:
            return combo
        pivot = min(reduced)
        lead = reduced[pivot]
        basis.append(
            (pivot, {k: v / lead for k, v in reduced.items()}, combo * (1 / lead))
        )
        power = matrix.apply(power)
        degree += 1


def minimal_polynomial(matrix: SparseMatrix, seeds: Iterable[Mapping[int, Any]]) -> UniPoly:
    """
    Monic polynomial of least degree annihilating A on the span of the seeds
    (the lcm of the per-seed minimal polynomials).

    Raises:
        IndexRangeError: A seed index outside the matrix
    """
    result = UniPoly.one()
    for seed in seeds:
        if any(not 0 <= index < matrix.dim for index in seed):
            raise IndexRangeError(f"Seed vector has indices outside 0..{matrix.dim - 1}")
        remainder = _apply_polynomial(matrix, result, seed)
        if remainder:
            result = result * vector_minimal_polynomial(matrix, remainder)
    logger.debug("Minimal polynomial on %d-dim space: %s", matrix.dim, result)
    return result


def unit_vectors(dim: int) -> List[Vector]:
    return [{i: 1} for i in range(dim)]


__all__ = [
    "SparseMatrix",
    "Vector",
    "minimal_polynomial",
    "vector_minimal_polynomial",
    "unit_vectors",
]
