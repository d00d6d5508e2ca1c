"""
Classical Group Dimensions

Package: src.groups
Purpose: Dimension formulas for GL_N, O_N and Sp_N and their consistency checks
Status: Complete
"""

from src.groups.dimensions import (
    DimensionReport,
    dim_gl,
    dim_orth,
    dim_sp,
    dimension,
    duality_check,
    factor_product,
    partial_trace_ratio,
    trace_dimension,
)

__all__ = [
    "DimensionReport",
    "dim_gl",
    "dim_orth",
    "dim_sp",
    "dimension",
    "duality_check",
    "factor_product",
    "partial_trace_ratio",
    "trace_dimension",
]
