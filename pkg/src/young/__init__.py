"""
Young Diagram Combinatorics

Package: src.young
Purpose: Partitions, skew shapes, standard tableaux, contents, hooks and S_m characters
Status: Complete
"""

from src.young.characters import character
from src.young.hooks import hook_length_product, hook_lengths, hook_product
from src.young.partition import Partition, SkewShape, partitions_of, sub_partitions
from src.young.tableau import StandardTableau, contents, dim, dim_skew, standard_tableaux

__all__ = [
    "Partition",
    "SkewShape",
    "StandardTableau",
    "character",
    "contents",
    "dim",
    "dim_skew",
    "hook_length_product",
    "hook_lengths",
    "hook_product",
    "partitions_of",
    "standard_tableaux",
    "sub_partitions",
]
