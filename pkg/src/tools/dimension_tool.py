"""
Dimension Tool

Module: src.tools.dimension_tool
Purpose: The `dims` verb: hook dimension formulas for GL_N, O_N and Sp_N
Status: Complete
Created: 2026-10-17
"""

from typing import Any, Dict

from src.exactmath.rational import format_rational
from src.groups.dimensions import dimension, duality_check, trace_dimension
from src.storage.serializers import DimensionRecord, to_payload
from src.tensorrep.group_kind import GroupFamily
from src.tools.base import Tool
from src.tools.inputs import GROUP_SCHEMA, N_SCHEMA, SHAPE_SCHEMA, build_kind, parse_shape


class DimensionTool(Tool):
    """
    Dimension of the irreducible labelled by λ, with its factor list.

    With `trace=True` the tool reports the trace of E_T instead, which
    for the symplectic group is D(λ') rather than D(λ).
    """

    @property
    def name(self) -> str:
        return "dims"

    @property
    def description(self) -> str:
        return (
            "Dimension of an irreducible representation of GL_N, O_N or Sp_N "
            "by the hook-type product formulas, with the linear factors listed."
        )

    @property
    def parameters(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "group": GROUP_SCHEMA,
                "N": N_SCHEMA,
                "lambda": SHAPE_SCHEMA,
                "trace": {
                    "type": "boolean",
                    "description": "Report tr E_T (D(λ'), for Sp_N) instead of the dimension of L(λ)",
                },
            },
            "required": ["group", "N", "lambda"],
        }

    def execute(self, **kwargs) -> Dict[str, Any]:
        return self._guarded(lambda: self._compute(kwargs))

    def _compute(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        kind = build_kind(kwargs)
        shape = parse_shape(kwargs.get("lambda"))
        if kwargs.get("trace"):
            kind.check_shape(shape)
            return {
                "group": kind.family.value,
                "N": kind.N,
                "lambda": list(shape.parts),
                "trace": format_rational(trace_dimension(shape, kind)),
            }
        report = dimension(shape, kind)
        data = to_payload(DimensionRecord.from_domain(report))
        if kind.family is GroupFamily.ORTHOGONAL:
            data["duality"] = duality_check(shape, kind.N)
        return data

    def render(self, data: Dict[str, Any]) -> str:
        if "trace" in data:
            return data["trace"]
        return data["value"]


__all__ = ["DimensionTool"]
