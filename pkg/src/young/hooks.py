"""
Hook Lengths

Module: src.young.hooks
Purpose: Hook lengths and the hook product H(θ) = |θ|!/dim θ
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction
from math import factorial, prod
from typing import Dict, Union

from src.young.partition import Box, Partition, SkewShape
from src.young.tableau import dim_skew


def hook_lengths(shape: Partition) -> Dict[Box, int]:
    """Hook length of every box: arm + leg + 1."""
    conjugate = shape.conjugate()
    return {
        (i, j): shape.row(i) - j + conjugate.row(j) - i + 1
        for (i, j) in shape.boxes()
    }


def hook_length_product(shape: Partition) -> int:
    """Product of all hook lengths (1 for the empty diagram)."""
    return prod(hook_lengths(shape).values())


def hook_product(shape: Union[SkewShape, Partition]) -> Fraction:
    """
    H(θ) = |θ|!/dim θ for a skew shape θ. For a normal shape this is the
    product of hook lengths.
    """
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    return Fraction(factorial(shape.size), dim_skew(shape))


__all__ = ["hook_lengths", "hook_length_product", "hook_product"]
