"""
Pytest Configuration and Fixtures

Module: tests.conftest
Purpose: Shared group kinds, cached idempotent builders and hypothesis profile
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from src.tensorrep.group_kind import GroupKind
from src.tensorrep.idempotents import IdempotentBuilder
from src.young.partition import Partition

settings.register_profile(
    "brauerchar",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("brauerchar")


@pytest.fixture
def shape():
    """Factory: shape("2,1") -> Partition((2, 1))"""
    return Partition.parse


@pytest.fixture
def orthogonal6() -> GroupKind:
    return GroupKind.orthogonal(6)


@pytest.fixture
def orthogonal5() -> GroupKind:
    return GroupKind.orthogonal(5)


@pytest.fixture
def symplectic6() -> GroupKind:
    return GroupKind.symplectic(6)


@pytest.fixture
def symplectic4() -> GroupKind:
    return GroupKind.symplectic(4)


@pytest.fixture(scope="session")
def builders():
    """
    Session-wide IdempotentBuilder per group, so E_U prefixes are shared
    across tests.
    """
    cache = {}

    def get(kind: GroupKind) -> IdempotentBuilder:
        if kind not in cache:
            cache[kind] = IdempotentBuilder(kind)
        return cache[kind]

    return get


@pytest.fixture
def half() -> Fraction:
    return Fraction(1, 2)
