"""
Symmetric Group Characters

Module: src.young.characters
Purpose: Irreducible characters χ_λ(ρ) by the Murnaghan-Nakayama rule
Status: Complete
Created: 2026-10-17

Rim hooks are removed on beta-numbers: with β_i = λ_i + (ℓ - i), removing a
rim hook of length k replaces some β by β - k (which must be free and
non-negative), with sign (-1)^(number of β strictly between the two).
"""

from functools import lru_cache
from typing import FrozenSet, Tuple

from src.young.partition import Partition
from src.young.tableau import dim


def _beta_numbers(parts: Tuple[int, ...]) -> FrozenSet[int]:
    length = len(parts)
    return frozenset(part + length - i for i, part in enumerate(parts, start=1))


def _from_beta(betas: FrozenSet[int]) -> Tuple[int, ...]:
    ordered = sorted(betas, reverse=True)
    length = len(ordered)
    parts = tuple(b - (length - i) for i, b in enumerate(ordered, start=1))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _character(parts: Tuple[int, ...], cycle_type: Tuple[int, ...]) -> int:
    if not cycle_type:
        return 1 if not parts else 0
    if all(c == 1 for c in cycle_type):
        return dim(Partition(parts))
    k, rest = cycle_type[0], cycle_type[1:]
    betas = _beta_numbers(parts)
    value = 0
    for beta in betas:
        target = beta - k
        if target < 0 or target in betas:
            continue
        height = sum(1 for other in betas if target < other < beta)
        smaller = _from_beta((betas - {beta}) | {target})
        value += (-1) ** height * _character(smaller, rest)
    return value


def character(shape: Partition, cycle_type: Partition) -> int:
    """
    χ_shape evaluated at a permutation of the given cycle type.

    Raises:
        ValueError: Sizes differ
    """
    if shape.size != cycle_type.size:
        raise ValueError(
            f"Character of a shape of size {shape.size} at a cycle type of size {cycle_type.size}"
        )
    return _character(shape.parts, cycle_type.parts)


__all__ = ["character"]
