"""
Result storage for brauerchar.

JSON records for Schur expansions, characteristic map images, dimension
reports and sparse operators, plus the --output file writer.
"""

from src.storage.serializers import (
    ChImageRecord,
    DimensionRecord,
    OperatorRecord,
    ResultStorage,
    SchurExpansionRecord,
    dumps,
)

__all__ = [
    "ChImageRecord",
    "DimensionRecord",
    "OperatorRecord",
    "ResultStorage",
    "SchurExpansionRecord",
    "dumps",
]
