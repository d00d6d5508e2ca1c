"""
Result Serializers

Module: src.storage.serializers
Purpose: JSON records for Schur expansions, ch images, dimensions and operators
Status: Complete
Created: 2026-10-17

Rationals travel as "p/q" strings (or "p" for integers) and are never
rounded. Every record converts from and back to its domain object.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from pydantic import BaseModel, Field, RootModel, field_validator

from src.charmap.image import ChImage
from src.exactmath.rational import format_rational, parse_rational
from src.exactmath.sparse import SparseMatrix
from src.groups.dimensions import DimensionReport
from src.symfunc.schur import SchurExpansion
from src.tensorrep.group_kind import GroupFamily, GroupKind
from src.tensorrep.operator import ENCODING, TensorOperator
from src.young.partition import Partition

logger = logging.getLogger(__name__)


def _check_rational(value: str) -> str:
    parse_rational(value)
    return value


class ExpansionTerm(BaseModel):
    nu: List[int]
    coeff: str

    @field_validator("coeff")
    @classmethod
    def validate_coeff(cls, v: str) -> str:
        return _check_rational(v)


class SchurExpansionRecord(RootModel[List[ExpansionTerm]]):
    """
    A Schur expansion as a bare list of {"nu", "coeff"} terms. The variable
    count is not part of the list; documents that embed one carry "n".
    """

    @classmethod
    def from_domain(cls, expansion: SchurExpansion) -> "SchurExpansionRecord":
        return cls(
            [
                ExpansionTerm(nu=list(nu.parts), coeff=format_rational(coeff))
                for nu, coeff in expansion.sorted_terms()
            ]
        )

    def to_domain(self, n: int) -> SchurExpansion:
        return SchurExpansion(n, {Partition(tuple(t.nu)): parse_rational(t.coeff) for t in self.root})


class ChImageRecord(BaseModel):
    shape: List[int] = Field(alias="lambda")
    group: str
    N: int = Field(gt=0)
    n: int = Field(ge=0)
    terms: List[ExpansionTerm] = Field(default_factory=list)

    model_config = {"populate_by_name": True}

    @field_validator("group")
    @classmethod
    def validate_group(cls, v: str) -> str:
        if v not in (GroupFamily.ORTHOGONAL.value, GroupFamily.SYMPLECTIC.value):
            raise ValueError(f"ch images exist for orthogonal and symplectic groups, got '{v}'")
        return v

    @classmethod
    def from_domain(cls, image: ChImage) -> "ChImageRecord":
        expansion = SchurExpansionRecord.from_domain(image.expansion)
        return cls(
            shape=list(image.shape.parts),
            group=image.kind.family.value,
            N=image.kind.N,
            n=image.n,
            terms=expansion.root,
        )

    def to_domain(self) -> ChImage:
        kind = GroupKind(GroupFamily(self.group), self.N)
        expansion = SchurExpansionRecord(self.terms).to_domain(self.n)
        return ChImage(Partition(tuple(self.shape)), kind, expansion)


class DimensionRecord(BaseModel):
    group: str
    N: int = Field(gt=0)
    shape: List[int] = Field(alias="lambda")
    value: str
    factors: List[int] = Field(default_factory=list)
    hook_product: int = 1

    model_config = {"populate_by_name": True}

    @classmethod
    def from_domain(cls, report: DimensionReport) -> "DimensionRecord":
        return cls(
            group=report.group.family.value,
            N=report.group.N,
            shape=list(report.shape.parts),
            value=format_rational(report.value),
            factors=list(report.factors),
            hook_product=report.hook_product,
        )

    def to_domain(self) -> DimensionReport:
        return DimensionReport(
            GroupKind(GroupFamily(self.group), self.N),
            Partition(tuple(self.shape)),
            parse_rational(self.value),
            list(self.factors),
            self.hook_product,
        )


class OperatorRecord(BaseModel):
    N: int = Field(gt=0)
    m: int = Field(ge=0)
    encoding: str = ENCODING
    entries: List[Tuple[int, int, str]] = Field(default_factory=list)

    @classmethod
    def from_domain(cls, operator: TensorOperator) -> "OperatorRecord":
        return cls(
            N=operator.N,
            m=operator.m,
            entries=[(r, c, format_rational(v)) for r, c, v in operator.to_triples()],
        )

    def to_domain(self) -> TensorOperator:
        if self.encoding != ENCODING:
            raise ValueError(f"Unsupported index encoding '{self.encoding}'")
        size = self.N ** self.m
        entries = {(r, c): parse_rational(v) for r, c, v in self.entries}
        return TensorOperator(self.N, self.m, SparseMatrix(size, entries))


Record = Union[SchurExpansionRecord, ChImageRecord, DimensionRecord, OperatorRecord]


def to_payload(record: BaseModel) -> Any:
    return record.model_dump(by_alias=True, mode="json")


def dumps(record: Union[BaseModel, Dict[str, Any]]) -> str:
    """Sorted keys, two-space indent: identical inputs give identical text."""
    payload = to_payload(record) if isinstance(record, BaseModel) else record
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def loads_expansion(text: str) -> SchurExpansionRecord:
    return SchurExpansionRecord.model_validate_json(text)


def loads_ch_image(text: str) -> ChImageRecord:
    return ChImageRecord.model_validate_json(text)


def loads_dimension(text: str) -> DimensionRecord:
    return DimensionRecord.model_validate_json(text)


def loads_operator(text: str) -> OperatorRecord:
    return OperatorRecord.model_validate_json(text)


class ResultStorage:
    """Writes JSON documents to disk for --output."""

    def save(self, record: Union[BaseModel, Dict[str, Any]], path: Union[str, Path]) -> Path:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8") as f:
            f.write(dumps(record))
            f.write("\n")
        logger.info("Saved result to %s", target)
        return target


__all__ = [
    "ChImageRecord",
    "DimensionRecord",
    "ExpansionTerm",
    "OperatorRecord",
    "Record",
    "ResultStorage",
    "SchurExpansionRecord",
    "dumps",
    "loads_ch_image",
    "loads_dimension",
    "loads_expansion",
    "loads_operator",
    "to_payload",
]
