"""
Exact Arithmetic

Package: src.exactmath
Purpose: Rationals, polynomials and sparse matrices used by every other package
Status: Complete
"""

from src.exactmath.multipoly import MultiPoly
from src.exactmath.rational import (
    Rational,
    format_rational,
    parse_rational,
    rational_arith,
    to_rational,
)
from src.exactmath.sparse import SparseMatrix, minimal_polynomial, vector_minimal_polynomial
from src.exactmath.unipoly import UniPoly

__all__ = [
    "MultiPoly",
    "Rational",
    "SparseMatrix",
    "UniPoly",
    "format_rational",
    "minimal_polynomial",
    "parse_rational",
    "rational_arith",
    "to_rational",
    "vector_minimal_polynomial",
]
