"""
Idempotent Tool

Module: src.tools.idempotent_tool
Purpose: The `idempotent` verb: build E_T (or φ_λ) on (C^N)^⊗m
Status: Complete
Created: 2026-10-17
"""

from typing import Any, Dict

from src.exactmath.rational import format_rational
from src.storage.serializers import OperatorRecord, to_payload
from src.tools.base import Tool
from src.tools.inputs import (
    GROUP_SCHEMA,
    N_SCHEMA,
    SHAPE_SCHEMA,
    build_kind,
    builder_for,
    parse_shape,
    settings_from,
)
from src.young.tableau import standard_tableaux


class IdempotentTool(Tool):
    """
    Builds the primitive idempotent of one standard tableau of shape λ.

    Tableaux are numbered from 0 in lexicographic order of their row
    sequences. `central=True` builds φ_λ instead.
    """

    @property
    def name(self) -> str:
        return "idempotent"

    @property
    def description(self) -> str:
        return (
            "Primitive idempotent E_T (or the central idempotent φ_λ) acting on the "
            "tensor power of C^N, with its trace, rank data and optional sparse triples."
        )

    @property
    def parameters(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "group": GROUP_SCHEMA,
                "N": N_SCHEMA,
                "lambda": SHAPE_SCHEMA,
                "tableau_index": {"type": "integer", "minimum": 0, "default": 0},
                "central": {"type": "boolean", "default": False},
                "triples": {"type": "boolean", "default": False, "description": "Include (row, col, value) triples"},
                "max_dimension": {"type": "integer", "minimum": 1},
                "force_large": {"type": "boolean"},
                "rng_seed": {"type": "integer"},
            },
            "required": ["group", "N", "lambda"],
        }

    def execute(self, **kwargs) -> Dict[str, Any]:
        return self._guarded(lambda: self._compute(kwargs))

    def _compute(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        kind = build_kind(kwargs)
        shape = parse_shape(kwargs.get("lambda"))
        if shape.is_empty():
            raise ValueError("λ must have at least one box")
        builder = builder_for(kind, settings_from(kwargs))
        tableaux = standard_tableaux(shape)

        data: Dict[str, Any] = {
            "group": kind.family.value,
            "N": kind.N,
            "lambda": list(shape.parts),
            "tableaux": len(tableaux),
        }
        if kwargs.get("central"):
            operator = builder.central_idempotent(shape)
            data["operator"] = "central"
        else:
            index = int(kwargs.get("tableau_index") or 0)
            if not 0 <= index < len(tableaux):
                raise ValueError(f"tableau_index {index} outside 0..{len(tableaux) - 1}")
            tableau = tableaux[index]
            operator = builder.primitive_idempotent(tableau)
            data["operator"] = "primitive"
            data["tableau"] = tableau.filling()
            data["contents"] = [format_rational(c) for c in tableau.contents(kind.omega)]

        data["dimension"] = operator.dimension
        data["trace"] = format_rational(operator.trace())
        data["nnz"] = operator.matrix.nnz
        data["idempotent"] = operator @ operator == operator
        if kwargs.get("triples"):
            data["matrix"] = to_payload(OperatorRecord.from_domain(operator))
        return data

    def render(self, data: Dict[str, Any]) -> str:
        keys = [k for k in ("group", "N", "lambda", "operator", "tableau", "contents",
                            "dimension", "trace", "nnz", "idempotent") if k in data]
        width = max(len(k) for k in keys)
        lines = [f"{k.ljust(width)}  {data[k]}" for k in keys]
        if "matrix" in data:
            lines.append("entries:")
            lines.extend(f"  {r} {c} {v}" for r, c, v in data["matrix"]["entries"])
        return "\n".join(lines)


__all__ = ["IdempotentTool"]
