"""
Parameter Sequences

Module: src.symfunc.sequences
Purpose: The sequence a_i = (ε + i - 1)^2 and the specialization tuples a_ρ
Status: Complete
Created: 2026-10-17

ε is 0 for o_2n, 1/2 for o_2n+1 and 1 for sp_2n. The sequence is defined
for every integer i. The degenerate all-zero sequence turns double Schur
polynomials into ordinary ones.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from src.young.partition import Partition
from src.utils.exceptions import ShapeBoundError

VALID_EPSILONS = (Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass(frozen=True)
class ParameterSequence:
    """a_i = (ε + i - 1)^2, or identically zero when `vanishing` is set."""

    epsilon: Fraction = Fraction(0)
    vanishing: bool = False

    def __post_init__(self):
        eps = Fraction(self.epsilon)
        if not self.vanishing and eps not in VALID_EPSILONS:
            raise ValueError(f"ε must be one of 0, 1/2, 1; got {eps}")
        object.__setattr__(self, "epsilon", eps)

    @classmethod
    def zero(cls) -> "ParameterSequence":
        return cls(Fraction(0), vanishing=True)

    def __call__(self, i: int) -> Fraction:
        if self.vanishing:
            return Fraction(0)
        return (self.epsilon + i - 1) ** 2

    def effective_rank(self, n: int) -> Fraction:
        """2n + 2ε: N for the orthogonal sequences, N + 2 for the symplectic one."""
        return 2 * n + 2 * self.epsilon


def a_rho(rho: Partition, n: int, a: ParameterSequence) -> Tuple[Fraction, ...]:
    """
    (a_{ρ1+n}, a_{ρ2+n-1}, ..., a_{ρn+1}), missing parts read as 0.

    Raises:
        ShapeBoundError: ℓ(ρ) > n
    """
    if rho.length > n:
        raise ShapeBoundError(f"a_ρ needs ℓ(ρ) <= n; ρ = {rho} has {rho.length} rows, n = {n}")
    return tuple(a(rho[i - 1] + n - i + 1) for i in range(1, n + 1))


def sequence_for_epsilon(epsilon: Union[int, Fraction, str]) -> ParameterSequence:
    return ParameterSequence(Fraction(epsilon))


__all__ = ["ParameterSequence", "VALID_EPSILONS", "a_rho", "sequence_for_epsilon"]
