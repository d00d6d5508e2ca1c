"""
Symmetric Functions

Package: src.symfunc
Purpose: Schur and double Schur polynomials, parameter sequences, Schur expansion
Status: Complete
"""

from src.symfunc.double_schur import (
    DoubleSchur,
    column_product,
    column_value,
    double_schur,
    row_value,
)
from src.symfunc.schur import (
    SchurExpansion,
    SymmetricPolynomial,
    complete_homogeneous,
    elementary,
    schur,
    schur_expand,
)
from src.symfunc.sequences import ParameterSequence, a_rho

__all__ = [
    "DoubleSchur",
    "ParameterSequence",
    "SchurExpansion",
    "SymmetricPolynomial",
    "a_rho",
    "column_product",
    "column_value",
    "complete_homogeneous",
    "double_schur",
    "elementary",
    "row_value",
    "schur",
    "schur_expand",
]
