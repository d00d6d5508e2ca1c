"""
Verification Tool

Module: src.tools.verification_tool
Purpose: The `verify` verb: run a named property suite
Status: Complete
Created: 2026-10-17
"""

from typing import Any, Dict

from src.tools.base import Tool
from src.tools.inputs import parse_int_list, settings_from
from src.tools.verification import SUITES, VerificationRunner
from src.utils.constants import DEFAULT_MAX_M


class VerificationTool(Tool):
    """
    Wraps VerificationRunner.

    A suite that ran to completion is a successful tool call even when
    checks failed; the caller reads `data["passed"]`.
    """

    @property
    def name(self) -> str:
        return "verify"

    @property
    def description(self) -> str:
        return (
            "Property checks over small ranges: Brauer relations, idempotent properties, "
            "dimension formulas, closed form against the trace oracle, double Schur identities."
        )

    @property
    def parameters(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "suite": {"type": "string", "enum": list(SUITES) + ["all"]},
                "max_m": {"type": "integer", "minimum": 1, "default": DEFAULT_MAX_M},
                "N": {"type": "string", "description": "Comma-separated N for the dims and charmap suites (even values also run symplectic)"},
                "orthogonal_N": {"type": "string", "description": "Comma-separated N for the orthogonal charmap checks"},
                "symplectic_N": {"type": "string", "description": "Comma-separated even N for the symplectic charmap checks"},
                "max_dimension": {"type": "integer", "minimum": 1},
                "force_large": {"type": "boolean"},
                "rng_seed": {"type": "integer"},
            },
            "required": ["suite"],
        }

    def execute(self, **kwargs) -> Dict[str, Any]:
        return self._guarded(lambda: self._compute(kwargs))

    def _compute(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        options: Dict[str, Any] = {"settings": settings_from(kwargs)}
        if kwargs.get("max_m") is not None:
            max_m = int(kwargs["max_m"])
            if max_m < 1:
                raise ValueError(f"max_m must be positive, got {max_m}")
            options["max_m"] = max_m
        sizes = parse_int_list(kwargs.get("N"))
        if sizes:
            options["orthogonal_N"] = sizes
            options["symplectic_N"] = [N for N in sizes if N % 2 == 0]
            options["dimension_N"] = sizes
        for key in ("orthogonal_N", "symplectic_N"):
            values = parse_int_list(kwargs.get(key))
            if values:
                options[key] = values
        if any(N % 2 for N in options.get("symplectic_N", ())):
            raise ValueError("Symplectic N must be even")
        report = VerificationRunner(**options).run(kwargs["suite"])
        return report.to_dict()

    def render(self, data: Dict[str, Any]) -> str:
        lines = []
        for check in data["checks"]:
            mark = "ok  " if check["passed"] else "FAIL"
            line = f"{mark} {check['name']}"
            if not check["passed"] and check["detail"]:
                line += f"  ({check['detail']})"
            lines.append(line)
        failed = sum(1 for check in data["checks"] if not check["passed"])
        lines.append(f"{data['suite']}: {len(data['checks'])} checks, {failed} failed")
        return "\n".join(lines)


__all__ = ["VerificationTool"]
