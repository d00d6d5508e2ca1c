"""
Partitions and Skew Shapes

Module: src.young.partition
Purpose: Young diagrams, their conjugates, boxes and enumeration
Status: Complete
Created: 2026-10-17

Rows and columns are numbered from 1, so the box (i, j) sits in row i and
column j of a left-justified diagram and has content j - i. The empty
partition is a valid value everywhere.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

Box = Tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"Partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Partition.of(2, 1) == Partition((2, 1))"""
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Read the comma-separated format ("2,2"); "" and "0" give the empty
        partition. Trailing zero parts are ignored.

        Raises:
            ValueError: Non-integer parts or a non-decreasing sequence
        """
        stripped = text.strip()
        if stripped in ("", "0", "()", "[]"):
            return cls()
        try:
            values = [int(piece) for piece in stripped.strip("()[]").split(",") if piece.strip()]
        except ValueError:
            raise ValueError(f"Malformed partition: '{text}' (expected e.g. 2,2)") from None
        while values and values[-1] == 0:
            values.pop()
        return cls(tuple(values))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    # ------------------------------------------------------------------
    # Basic shape data
    # ------------------------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        """0-based part access; parts past the end are 0."""
        return self.parts[index] if 0 <= index < len(self.parts) else 0

    def row(self, i: int) -> int:
        """Length of row i (1-based), 0 past the end."""
        return self[i - 1]

    def is_empty(self) -> bool:
        return not self.parts

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))
        )

    def boxes(self) -> List[Box]:
        """(i, j) for every box, row by row."""
        return [(i, j) for i, part in enumerate(self.parts, start=1) for j in range(1, part + 1)]

    def contains(self, other: "Partition") -> bool:
        """other ⊆ self as diagrams."""
        return other.length <= self.length and all(
            other[i] <= self[i] for i in range(other.length)
        )

    def addable_boxes(self) -> List[Box]:
        """Boxes whose addition leaves a partition, top to bottom."""
        boxes = []
        for i in range(1, self.length + 2):
            if i == 1 or self.row(i) < self.row(i - 1):
                boxes.append((i, self.row(i) + 1))
        return boxes

    def removable_boxes(self) -> List[Box]:
        """Corner boxes, top to bottom."""
        return [
            (i, self.row(i))
            for i in range(1, self.length + 1)
            if self.row(i) > self.row(i + 1)
        ]

    def add_box(self, row: int) -> "Partition":
        """Add a box at the end of row `row` (1-based)."""
        parts = list(self.parts) + [0]
        parts[row - 1] += 1
        return Partition(tuple(p for p in parts if p))

    def remove_box(self, row: int) -> "Partition":
        """Remove the last box of row `row` (1-based)."""
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition(tuple(p for p in parts if p))


@dataclass(frozen=True)
class SkewShape:
    """outer / inner with inner ⊆ outer."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        """"2,2/1" or "2,1" (inner empty)."""
        outer, _, inner = text.partition("/")
        return cls(Partition.parse(outer), Partition.parse(inner))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def boxes(self) -> List[Box]:
        return [(i, j) for (i, j) in self.outer.boxes() if j > self.inner.row(i)]

    def is_normal(self) -> bool:
        return self.inner.is_empty()

    def __str__(self) -> str:
        return str(self.outer) if self.inner.is_empty() else f"{self.outer}/{self.inner}"


@lru_cache(maxsize=None)
def _partitions(m: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    result = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions_of(
    m: int, max_rows: Optional[int] = None, max_cols: Optional[int] = None
) -> List[Partition]:
    """
    All partitions of m in reverse-lexicographic order, optionally with at
    most max_rows rows and at most max_cols columns.

    Raises:
        ValueError: m < 0
    """
    if m < 0:
        raise ValueError(f"Cannot partition a negative number: {m}")
    largest = m if max_cols is None else min(m, max_cols)
    return [
        Partition(parts)
        for parts in _partitions(m, largest)
        if max_rows is None or len(parts) <= max_rows
    ]


def sub_partitions(shape: Partition) -> List[Partition]:
    """Every μ ⊆ shape (∅ and shape included), by size then reverse-lex."""
    found = []
    for size in range(shape.size + 1):
        for candidate in partitions_of(size, max_rows=shape.length, max_cols=shape[0]):
            if shape.contains(candidate):
                found.append(candidate)
    return found


__all__ = ["Box", "Partition", "SkewShape", "partitions_of", "sub_partitions"]
