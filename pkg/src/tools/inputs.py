"""
Tool Input Parsing

Module: src.tools.inputs
Purpose: Shared parsing of partitions, groups and compute settings for tools
Status: Complete
Created: 2026-10-17
"""

from typing import Any, Dict, List, Optional, Sequence, Union

from src.exactmath.rational import parse_rational, to_rational
from src.tensorrep.group_kind import GroupKind
from src.tensorrep.idempotents import IdempotentBuilder
from src.utils.config import ComputeSettings, GroupConfig
from src.young.partition import Partition

ShapeInput = Union[str, Sequence[int], Partition, None]

SHAPE_SCHEMA = {
    "type": "string",
    "description": "Partition as comma-separated parts, e.g. '2,2' ('' or '0' for the empty partition)",
}
GROUP_SCHEMA = {
    "type": "string",
    "enum": GroupConfig.list_names(),
    "description": "Group family",
}
N_SCHEMA = {"type": "integer", "minimum": 1, "description": "Dimension N of the vector representation"}


def parse_shape(value: ShapeInput, field: str = "lambda") -> Partition:
    """
    Raises:
        KeyError: value missing
        ValueError: malformed partition
    """
    if value is None:
        raise KeyError(field)
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition(tuple(int(part) for part in value))


def parse_int_list(value: Union[str, Sequence[int], int, None]) -> List[int]:
    if value is None:
        return []
    if isinstance(value, int):
        return [value]
    if isinstance(value, str):
        return [int(piece) for piece in value.split(",") if piece.strip()]
    return [int(piece) for piece in value]


def parse_point(value: Union[str, Sequence[Any]]) -> List:
    """Rational coordinates from '1,1/2,-3' or a sequence."""
    if isinstance(value, str):
        return [parse_rational(piece) for piece in value.split(",") if piece.strip()]
    try:
        return [to_rational(piece) for piece in value]
    except TypeError as e:
        raise ValueError(str(e)) from None


def build_kind(kwargs: Dict[str, Any]) -> GroupKind:
    """
    Raises:
        KeyError: group or N missing
        ValueError: unknown group or invalid N
    """
    return GroupConfig.build(kwargs["group"], int(kwargs["N"]))


def settings_from(kwargs: Dict[str, Any]) -> ComputeSettings:
    values = {
        key: kwargs[key]
        for key in ("max_dimension", "force_large", "rng_seed", "log_level")
        if kwargs.get(key) is not None
    }
    return ComputeSettings(**values)


def builder_for(kind: GroupKind, settings: Optional[ComputeSettings] = None) -> IdempotentBuilder:
    settings = settings or ComputeSettings()
    return IdempotentBuilder(
        kind,
        max_dimension=settings.max_dimension,
        force_large=settings.force_large,
        rng_seed=settings.rng_seed,
    )


__all__ = [
    "GROUP_SCHEMA",
    "N_SCHEMA",
    "SHAPE_SCHEMA",
    "build_kind",
    "builder_for",
    "parse_int_list",
    "parse_point",
    "parse_shape",
    "settings_from",
]
