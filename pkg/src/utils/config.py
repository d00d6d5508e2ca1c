"""
Configuration Management

Module: src.utils.config
Purpose: Validated compute settings and the group-name alias table
Status: Complete
Created: 2026-10-17

Everything is configured through command-line flags; nothing is read from
the environment or from files, so identical invocations give identical
output. ComputeSettings validates the flag values; GroupConfig turns the
names accepted by --group into GroupKind values.
"""

from typing import Dict, List

from pydantic import BaseModel, Field, field_validator

from src.tensorrep.group_kind import GroupFamily, GroupKind
from src.utils.constants import DEFAULT_MAX_DIMENSION, DEFAULT_RNG_SEED
from src.utils.logger import resolve_level


class ComputeSettings(BaseModel):
    """Run-wide limits and switches."""

    max_dimension: int = Field(DEFAULT_MAX_DIMENSION, gt=0)
    force_large: bool = False
    log_level: str = "WARNING"
    rng_seed: int = DEFAULT_RNG_SEED

    model_config = {"frozen": True}

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        resolve_level(value)
        return value.upper()


class GroupConfig:
    """
    Names accepted for each group family.

    Supports the short CLI names and the full family names.
    """

    GROUP_ALIASES: Dict[str, GroupFamily] = {
        "gl": GroupFamily.GENERAL_LINEAR,
        "general_linear": GroupFamily.GENERAL_LINEAR,
        "general-linear": GroupFamily.GENERAL_LINEAR,
        "o": GroupFamily.ORTHOGONAL,
        "orth": GroupFamily.ORTHOGONAL,
        "orthogonal": GroupFamily.ORTHOGONAL,
        "sp": GroupFamily.SYMPLECTIC,
        "symplectic": GroupFamily.SYMPLECTIC,
    }

    @classmethod
    def resolve(cls, name: str) -> GroupFamily:
        """
        Resolve a group name or alias to its family.

        Raises:
            ValueError: If the name is not recognised
        """
        key = name.strip().lower()
        if key in cls.GROUP_ALIASES:
            return cls.GROUP_ALIASES[key]
        raise ValueError(
            f"Unknown group: '{name}'. Must be one of: {', '.join(cls.list_names())}"
        )

    @classmethod
    def build(cls, name: str, N: int) -> GroupKind:
        """
        Resolve the name and validate N for that family.

        Raises:
            ValueError: Unknown name, or N invalid for the family
        """
        return GroupKind(cls.resolve(name), N)

    @classmethod
    def list_names(cls) -> List[str]:
        return sorted(cls.GROUP_ALIASES)


__all__ = ["ComputeSettings", "GroupConfig"]
