"""
Schur Polynomial Tools

Module: src.tools.schur_tool
Purpose: The `schur` and `double-schur` verbs
Status: Complete
Created: 2026-10-17
"""

from typing import Any, Dict

from src.exactmath.rational import format_rational
from src.symfunc.double_schur import double_schur
from src.symfunc.schur import schur
from src.symfunc.sequences import ParameterSequence, a_rho, sequence_for_epsilon
from src.tools.base import Tool
from src.tools.inputs import SHAPE_SCHEMA, parse_point, parse_shape
from src.utils.config import GroupConfig


class SchurTool(Tool):
    """s_ν(t1, ..., tn) by semistandard tableaux."""

    @property
    def name(self) -> str:
        return "schur"

    @property
    def description(self) -> str:
        return "Schur polynomial s_ν in n variables, as a sum of monomials, optionally evaluated at a point."

    @property
    def parameters(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "nu": SHAPE_SCHEMA,
                "n": {"type": "integer", "minimum": 1},
                "point": {"type": "string", "description": "Comma-separated rationals, e.g. '1,1/2,2'"},
            },
            "required": ["nu", "n"],
        }

    def execute(self, **kwargs) -> Dict[str, Any]:
        return self._guarded(lambda: self._compute(kwargs))

    def _compute(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        nu = parse_shape(kwargs.get("nu"), "nu")
        n = int(kwargs["n"])
        poly = schur(nu, n)
        data: Dict[str, Any] = {
            "nu": list(nu.parts),
            "n": n,
            "polynomial": str(poly),
            "terms": [
                {"exps": list(exps), "coeff": format_rational(coeff)}
                for exps, coeff in poly.poly.sorted_terms()
            ],
            "dimension": format_rational(poly.evaluate([1] * n)),
        }
        if kwargs.get("point") is not None:
            data["value"] = format_rational(poly.evaluate(parse_point(kwargs["point"])))
        return data

    def render(self, data: Dict[str, Any]) -> str:
        text = data["polynomial"]
        if "value" in data:
            text += f"\nvalue: {data['value']}"
        return text


class DoubleSchurTool(Tool):
    """
    s_ν(x | a) with a_i = (ε + i - 1)^2, evaluated at a_ρ or at a point.

    ε comes either from `epsilon` directly or from a group and N
    (0 for even orthogonal, 1/2 for odd orthogonal, 1 for symplectic).
    """

    @property
    def name(self) -> str:
        return "double-schur"

    @property
    def description(self) -> str:
        return (
            "Double (factorial) Schur polynomial s_ν(x | a) evaluated at the special "
            "points a_ρ or at an explicit rational point; s_ν(a_ρ | a) vanishes unless ν ⊆ ρ."
        )

    @property
    def parameters(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "nu": SHAPE_SCHEMA,
                "n": {"type": "integer", "minimum": 1},
                "epsilon": {"type": "string", "enum": ["0", "1/2", "1"]},
                "group": {"type": "string", "enum": GroupConfig.list_names()},
                "N": {"type": "integer", "minimum": 2},
                "rho": SHAPE_SCHEMA,
                "point": {"type": "string", "description": "Comma-separated rationals"},
                "zero_sequence": {"type": "boolean", "default": False},
            },
            "required": ["nu"],
        }

    def execute(self, **kwargs) -> Dict[str, Any]:
        return self._guarded(lambda: self._compute(kwargs))

    def _sequence(self, kwargs: Dict[str, Any]):
        if kwargs.get("zero_sequence"):
            return ParameterSequence.zero(), kwargs.get("n")
        if kwargs.get("group") is not None:
            kind = GroupConfig.build(kwargs["group"], int(kwargs["N"]))
            if not kind.is_brauer:
                raise ValueError("ε is only defined for the orthogonal and symplectic groups")
            return sequence_for_epsilon(kind.epsilon), kwargs.get("n") or kind.n
        if kwargs.get("epsilon") is None:
            raise KeyError("epsilon (or group and N)")
        return sequence_for_epsilon(kwargs["epsilon"]), kwargs.get("n")

    def _compute(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        nu = parse_shape(kwargs.get("nu"), "nu")
        a, n = self._sequence(kwargs)
        if n is None:
            raise KeyError("n")
        n = int(n)
        poly = double_schur(nu, n, a)
        data: Dict[str, Any] = {
            "nu": list(nu.parts),
            "n": n,
            "epsilon": "zero" if a.vanishing else format_rational(a.epsilon),
        }
        if kwargs.get("point") is not None:
            point = parse_point(kwargs["point"])
        else:
            rho = parse_shape(kwargs.get("rho"), "rho")
            point = a_rho(rho, n, a)
            data["rho"] = list(rho.parts)
            data["contained"] = rho.contains(nu)
        data["point"] = [format_rational(v) for v in point]
        data["value"] = format_rational(poly.evaluate(point))
        return data

    def render(self, data: Dict[str, Any]) -> str:
        return data["value"]


__all__ = ["DoubleSchurTool", "SchurTool"]
