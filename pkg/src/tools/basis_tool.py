"""
Basis Tool

Module: src.tools.basis_tool
Purpose: The `basis` verb: the diagram basis of B_m
Status: Complete
Created: 2026-10-17
"""

from typing import Any, Dict

from src.brauer.diagram import all_diagrams, count_basis
from src.tools.base import Tool

# Listing beyond this many dots is refused; counting is not limited
MAX_LISTED_M = 6


class BasisTool(Tool):
    """Counts or lists the (2m-1)!! Brauer diagrams."""

    @property
    def name(self) -> str:
        return "basis"

    @property
    def description(self) -> str:
        return "Size of the diagram basis of the Brauer algebra B_m, optionally listing every diagram."

    @property
    def parameters(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "m": {"type": "integer", "minimum": 1},
                "list": {"type": "boolean", "default": False},
            },
            "required": ["m"],
        }

    def execute(self, **kwargs) -> Dict[str, Any]:
        return self._guarded(lambda: self._compute(kwargs))

    def _compute(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        m = int(kwargs["m"])
        if m < 1:
            raise ValueError(f"m must be positive, got {m}")
        data: Dict[str, Any] = {"m": m, "count": count_basis(m)}
        if kwargs.get("list"):
            if m > MAX_LISTED_M:
                raise ValueError(f"Listing is limited to m <= {MAX_LISTED_M}")
            data["diagrams"] = [str(d) for d in all_diagrams(m)]
        return data

    def render(self, data: Dict[str, Any]) -> str:
        lines = [str(data["count"])]
        lines.extend(data.get("diagrams", []))
        return "\n".join(lines)


__all__ = ["BasisTool"]
