"""
Standard Tableaux

Module: src.young.tableau
Purpose: Standard tableaux as chains of diagrams, contents and skew counts
Status: Complete
Created: 2026-10-17

A standard tableau of shape λ with m boxes is stored as its row sequence:
the 1-based row receiving each of the entries 1..m. This is the chain
∅ = Λ0 ⊂ Λ1 ⊂ ... ⊂ Λm = λ, and the order of standard_tableaux() is the
lexicographic order of these sequences.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from src.young.partition import Box, Partition, SkewShape


@dataclass(frozen=True)
class StandardTableau:
    """Row sequence of a standard filling of `shape`."""

    shape: Partition
    rows: Tuple[int, ...]

    def __post_init__(self):
        current = Partition()
        for row in self.rows:
            if row < 1 or row > current.length + 1 or (row > 1 and current.row(row) >= current.row(row - 1)):
                raise ValueError(f"Row sequence {self.rows} is not a standard filling")
            current = current.add_box(row)
        if current != self.shape:
            raise ValueError(f"Row sequence {self.rows} fills {current}, not {self.shape}")

    @classmethod
    def from_rows(cls, rows: Tuple[int, ...]) -> "StandardTableau":
        shape = Partition()
        for row in rows:
            shape = shape.add_box(row)
        return cls(shape, tuple(rows))

    @classmethod
    def from_filling(cls, filling: List[List[int]]) -> "StandardTableau":
        """
        Build from rows of entries, e.g. [[1, 2], [3]].

        Raises:
            ValueError: Not a standard filling of 1..m
        """
        m = sum(len(row) for row in filling)
        where: Dict[int, int] = {}
        for i, row in enumerate(filling, start=1):
            for value in row:
                where[value] = i
        if sorted(where) != list(range(1, m + 1)):
            raise ValueError(f"Filling {filling} does not use 1..{m} exactly once")
        tableau = cls.from_rows(tuple(where[a] for a in range(1, m + 1)))
        if tableau.filling() != [list(row) for row in filling]:
            raise ValueError(f"Filling {filling} is not standard")
        return tableau

    @property
    def m(self) -> int:
        return len(self.rows)

    def boxes(self) -> List[Box]:
        """Box (i, j) holding entry a, for a = 1..m."""
        lengths: Dict[int, int] = {}
        result = []
        for row in self.rows:
            lengths[row] = lengths.get(row, 0) + 1
            result.append((row, lengths[row]))
        return result

    def box_of(self, entry: int) -> Box:
        return self.boxes()[entry - 1]

    def filling(self) -> List[List[int]]:
        table: List[List[int]] = [[] for _ in range(self.shape.length)]
        for entry, row in enumerate(self.rows, start=1):
            table[row - 1].append(entry)
        return table

    def chain(self) -> List[Partition]:
        """(Λ1, ..., Λm)"""
        shapes = []
        current = Partition()
        for row in self.rows:
            current = current.add_box(row)
            shapes.append(current)
        return shapes

    def remove_last(self) -> "StandardTableau":
        """The tableau U obtained by deleting the box holding m."""
        if not self.rows:
            raise ValueError("The empty tableau has no last box")
        return StandardTableau.from_rows(self.rows[:-1])

    def contents(self, omega: Optional[Union[int, Fraction]] = None) -> List[Fraction]:
        """
        c_a = (ω-1)/2 + j - i for the box (i, j) holding a; without ω the
        shift is 0 (symmetric group contents j - i).
        """
        shift = Fraction(0) if omega is None else (Fraction(omega) - 1) / 2
        return [shift + j - i for (i, j) in self.boxes()]

    def __str__(self) -> str:
        return " / ".join(" ".join(str(v) for v in row) for row in self.filling())


def contents(tableau: StandardTableau, omega: Optional[Union[int, Fraction]] = None) -> List[Fraction]:
    return tableau.contents(omega)


def standard_tableaux(shape: Partition) -> List[StandardTableau]:
    """All standard tableaux of `shape`, lexicographic in the row sequence."""
    return [StandardTableau(shape, rows) for rows in _row_sequences(shape.parts)]


@lru_cache(maxsize=None)
def _row_sequences(parts: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    # Sequences ending at `parts`: pick the last box among the corners.
    if not parts:
        return ((),)
    shape = Partition(parts)
    found = []
    for row, _ in shape.removable_boxes():
        for prefix in _row_sequences(shape.remove_box(row).parts):
            found.append(prefix + (row,))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def _count_chains(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> int:
    if outer == inner:
        return 1
    shape, base = Partition(outer), Partition(inner)
    total = 0
    for row, _ in shape.removable_boxes():
        smaller = shape.remove_box(row)
        if smaller.contains(base):
            total += _count_chains(smaller.parts, inner)
    return total


def dim_skew(shape: Union[SkewShape, Partition]) -> int:
    """Number of standard fillings of a skew shape."""
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    return _count_chains(shape.outer.parts, shape.inner.parts)


def dim(shape: Partition) -> int:
    return dim_skew(SkewShape(shape))


__all__ = ["StandardTableau", "standard_tableaux", "contents", "dim_skew", "dim"]
