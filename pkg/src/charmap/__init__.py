"""
Characteristic Maps

The closed form of ch(φ_λ) for the orthogonal and symplectic groups, the
brute-force trace oracle it is checked against, and the general linear map.
"""

from src.charmap.image import ChImage
from src.charmap.oracle import (
    central_character_element,
    ch_oracle,
    character_operator,
    characteristic,
    gl_characteristic,
)
from src.charmap.theorem import (
    c_constant,
    ch_theorem,
    inner_sum,
    normalized_symmetrizer,
    row_column_inner_sum,
    symmetrizer_image,
)

__all__ = [
    "ChImage",
    "c_constant",
    "central_character_element",
    "ch_oracle",
    "ch_theorem",
    "character_operator",
    "characteristic",
    "gl_characteristic",
    "inner_sum",
    "normalized_symmetrizer",
    "row_column_inner_sum",
    "symmetrizer_image",
]
