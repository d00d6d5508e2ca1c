"""
Characteristic Map Tool

Module: src.tools.characteristic_map_tool
Purpose: The `chmap` verb: ch(φ_λ), the row/column closed forms, and the GL map
Status: Complete
Created: 2026-10-17

For the orthogonal and symplectic groups the closed form is always
computed; `oracle=True` also builds φ_λ explicitly and reports whether the
two agree. For the general linear group the tool returns ch(χ_λ), which is
s_λ(x1, ..., xN).
"""

import logging
from typing import Any, Dict

from src.charmap.oracle import central_character_element, ch_oracle, gl_characteristic
from src.charmap.theorem import ch_theorem, symmetrizer_image
from src.storage.serializers import ChImageRecord, SchurExpansionRecord, to_payload
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

logger = logging.getLogger(__name__)


class CharacteristicMapTool(Tool):
    """ch(φ_λ) as a Schur expansion in y1^2, ..., yn^2."""

    @property
    def name(self) -> str:
        return "chmap"

    @property
    def description(self) -> str:
        return (
            "Image of the central idempotent φ_λ under the characteristic map, as a "
            "Schur expansion; optionally cross-checked against an explicit trace, or the "
            "closed form for the symmetrizer / antisymmetrizer."
        )

    @property
    def parameters(self) -> Dict[str, Any]:
        return {
            "type": "object",
            "properties": {
                "group": GROUP_SCHEMA,
                "N": N_SCHEMA,
                "n": {"type": "integer", "description": "Rank; must equal floor(N/2)"},
                "lambda": SHAPE_SCHEMA,
                "oracle": {"type": "boolean", "default": False},
                "prune": {"type": "boolean", "default": True},
                "symmetrizer": {
                    "type": "integer",
                    "minimum": 1,
                    "description": "l: report the image of S^(2l) (or A^(2l) with anti) instead of φ_λ",
                },
                "anti": {"type": "boolean", "default": False},
                "max_dimension": {"type": "integer", "minimum": 1},
                "force_large": {"type": "boolean"},
                "rng_seed": {"type": "integer"},
            },
            "required": ["group", "N"],
        }

    def execute(self, **kwargs) -> Dict[str, Any]:
        return self._guarded(lambda: self._compute(kwargs))

    def _compute(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        kind = build_kind(kwargs)
        n = kwargs.get("n")

        if not kind.is_brauer:
            shape = parse_shape(kwargs.get("lambda"))
            expansion = gl_characteristic(central_character_element(shape), kind.N)
            return {
                "lambda": list(shape.parts),
                "group": kind.family.value,
                "N": kind.N,
                "n": expansion.n,
                "terms": to_payload(SchurExpansionRecord.from_domain(expansion)),
            }

        if kwargs.get("symmetrizer") is not None:
            image = symmetrizer_image(int(kwargs["symmetrizer"]), kind, n, anti=bool(kwargs.get("anti")))
            return to_payload(ChImageRecord.from_domain(image))

        shape = parse_shape(kwargs.get("lambda"))
        prune = kwargs.get("prune", True)
        image = ch_theorem(shape, kind, n, prune=True if prune is None else bool(prune))
        data = to_payload(ChImageRecord.from_domain(image))
        if kwargs.get("oracle"):
            oracle = ch_oracle(shape, kind, n, builder=builder_for(kind, settings_from(kwargs)))
            data["oracle_agrees"] = oracle == image
            if not data["oracle_agrees"]:
                logger.warning("Closed form and trace disagree for %s on %s", shape, kind)
                data["oracle_terms"] = to_payload(ChImageRecord.from_domain(oracle))["terms"]
        return data

    def render(self, data: Dict[str, Any]) -> str:
        lines = []
        terms = data["terms"]
        if not terms:
            lines.append("0")
        width = max((len(",".join(map(str, t["nu"]))) for t in terms), default=0)
        for term in terms:
            nu = ",".join(map(str, term["nu"])) or "0"
            lines.append(f"s[{nu.ljust(width)}]  {term['coeff']}")
        if "oracle_agrees" in data:
            lines.append(f"oracle agrees: {data['oracle_agrees']}")
        return "\n".join(lines)


__all__ = ["CharacteristicMapTool"]
