"""
Brauer Diagrams

Module: src.brauer.diagram
Purpose: Perfect matchings on 2m dots, composition with loop counting
Status: Complete
Created: 2026-10-17

Dots are numbered internally 0..2m-1: the top dot a (1..m) is a-1 and the
bottom dot a' is m+a-1. An edge is stored as a sorted pair and the edge list
is sorted, which fixes one canonical form per diagram.

Composition d1·d2 places d1 above d2 and glues the bottom row of d1 to the
top row of d2. Components of the stacked picture that never reach the outer
rows are closed loops.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from src.utils.exceptions import DimensionMismatchError, IndexRangeError

Edge = Tuple[int, int]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    """Canonical perfect matching on the dots of an m-diagram."""

    m: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"A Brauer diagram needs m >= 1, got {self.m}")
        edges = tuple(sorted(tuple(sorted(edge)) for edge in self.edges))
        seen = sorted(dot for edge in edges for dot in edge)
        if seen != list(range(2 * self.m)):
            raise ValueError(f"Edges {self.edges} are not a perfect matching on {2 * self.m} dots")
        object.__setattr__(self, "edges", edges)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, m: int) -> "BrauerDiagram":
        return cls(m, tuple((a, m + a) for a in range(m)))

    @classmethod
    def from_permutation(cls, images: Sequence[int]) -> "BrauerDiagram":
        """Top dot a joined to bottom dot images[a-1]' (1-based images)."""
        m = len(images)
        if sorted(images) != list(range(1, m + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{m}")
        return cls(m, tuple((a, m + images[a] - 1) for a in range(m)))

    @classmethod
    def parse(cls, text: str, m: int = None) -> "BrauerDiagram":
        """
        Read the edge list format "1-2,1'-2'" (primes mark bottom dots).

        Raises:
            ValueError: Malformed edges or not a perfect matching
        """
        pairs = [piece.strip() for piece in text.split(",") if piece.strip()]
        labels: List[Tuple[str, str]] = []
        for pair in pairs:
            left, sep, right = pair.partition("-")
            if not sep:
                raise ValueError(f"Malformed edge '{pair}' (expected e.g. 1-2')")
            labels.append((left.strip(), right.strip()))
        if m is None:
            m = len(labels)
        return cls(m, tuple((_dot(left, m), _dot(right, m)) for left, right in labels))

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def label(self, dot: int) -> str:
        return str(dot + 1) if dot < self.m else f"{dot - self.m + 1}'"

    def __str__(self) -> str:
        return ",".join(f"{self.label(u)}-{self.label(v)}" for u, v in self.edges)

    def mates(self) -> Dict[int, int]:
        pairing: Dict[int, int] = {}
        for u, v in self.edges:
            pairing[u] = v
            pairing[v] = u
        return pairing

    def is_top(self, dot: int) -> bool:
        return dot < self.m

    def top_arcs(self) -> List[Edge]:
        return [(u, v) for u, v in self.edges if v < self.m]

    def bottom_arcs(self) -> List[Edge]:
        return [(u, v) for u, v in self.edges if u >= self.m]

    def through_strings(self) -> List[Edge]:
        return [(u, v) for u, v in self.edges if u < self.m <= v]

    def is_permutation(self) -> bool:
        return len(self.through_strings()) == self.m

    def to_permutation(self) -> Tuple[int, ...]:
        """images[a-1] = b when top a meets bottom b'."""
        if not self.is_permutation():
            raise ValueError(f"{self} has horizontal arcs")
        images = [0] * self.m
        for u, v in self.edges:
            images[u] = v - self.m + 1
        return tuple(images)

    # ------------------------------------------------------------------
    # Composition
    # ------------------------------------------------------------------

    def compose(self, other: "BrauerDiagram") -> Tuple[int, "BrauerDiagram"]:
        """
        Stack self above other.

        Returns:
            (number of closed loops, resulting diagram)

        Raises:
            DimensionMismatchError: Different m
        """
        if other.m != self.m:
            raise DimensionMismatchError(f"Cannot compose {self.m}- and {other.m}-diagrams")
        m = self.m
        # 0..m-1 top of self, m..2m-1 glued middle row, 2m..3m-1 bottom of other
        forest = _UnionFind(3 * m)
        for u, v in self.edges:
            forest.union(u, v)
        for u, v in other.edges:
            forest.union(u + m, v + m)

        outer: Dict[int, List[int]] = {}
        for dot in list(range(m)) + list(range(2 * m, 3 * m)):
            outer.setdefault(forest.find(dot), []).append(dot)
        loops = len({forest.find(dot) for dot in range(m, 2 * m)} - set(outer))

        edges = []
        for ends in outer.values():
            u, v = (dot if dot < m else dot - m for dot in ends)
            edges.append((u, v))
        return loops, BrauerDiagram(m, tuple(edges))


def _dot(label: str, m: int) -> int:
    bottom = label.endswith("'")
    try:
        index = int(label.rstrip("'"))
    except ValueError:
        raise ValueError(f"Malformed dot label '{label}'") from None
    if not 1 <= index <= m:
        raise IndexRangeError(f"Dot {label} outside 1..{m}")
    return index - 1 + (m if bottom else 0)


def _matchings(dots: Tuple[int, ...]) -> Iterator[Tuple[Edge, ...]]:
    if not dots:
        yield ()
        return
    first, rest = dots[0], dots[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _matchings(remaining):
            yield ((first, partner),) + tail


def all_diagrams(m: int) -> Iterator[BrauerDiagram]:
    """Every m-diagram; there are 1·3·5···(2m-1) of them."""
    for edges in _matchings(tuple(range(2 * m))):
        yield BrauerDiagram(m, edges)


@lru_cache(maxsize=None)
def count_basis(m: int) -> int:
    """Number of m-diagrams, counted by enumeration."""
    if m < 1:
        raise ValueError(f"count_basis needs m >= 1, got {m}")
    return sum(1 for _ in all_diagrams(m))


__all__ = ["BrauerDiagram", "Edge", "all_diagrams", "count_basis"]
