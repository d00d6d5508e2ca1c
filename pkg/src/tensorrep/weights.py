"""
Diagonal Weights and Trace Pairings

Module: src.tensorrep.weights
Purpose: Diagonal Lie-algebra and group elements, and tr A·W1···Wm
Status: Complete
Created: 2026-10-17

Symbolic weights:
- general linear: X = diag(x1, ..., xN)
- orthogonal / symplectic: Y = diag(y1, ..., yn, [0], -yn, ..., -y1)

Group weights: Z = diag(z1, ..., zn, [1], 1/zn, ..., 1/z1), or any
diag(z1, ..., zN) for the general linear group.

The pairing Σ_i A[i,i]·Π_a w(i_a) only reads the diagonal of A. Symbolic
products are assembled as exponent vectors directly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.exactmath.multipoly import MultiPoly
from src.tensorrep.group_kind import GroupFamily, GroupKind
from src.tensorrep.operator import TensorOperator, decode
from src.utils.exceptions import DimensionMismatchError

Scalar = Union[int, Fraction]

# (sign, variable position) for a symbolic diagonal entry; None for 0
SymbolicEntry = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class DiagonalWeights:
    """Diagonal entries of a weight matrix on C^N, symbolic or concrete."""

    kind: GroupKind
    nvars: int = 0
    symbolic: Tuple[SymbolicEntry, ...] = ()
    values: Tuple[Fraction, ...] = ()

    @property
    def is_symbolic(self) -> bool:
        return bool(self.symbolic)

    @classmethod
    def lie_algebra(cls, kind: GroupKind) -> "DiagonalWeights":
        """X (general linear) or Y (orthogonal / symplectic) with formal variables."""
        N = kind.N
        if kind.family is GroupFamily.GENERAL_LINEAR:
            return cls(kind, N, tuple((1, i) for i in range(N)))
        n = kind.n
        entries: List[SymbolicEntry] = [(1, i) for i in range(n)]
        if N % 2:
            entries.append(None)
        entries += [(-1, i) for i in reversed(range(n))]
        return cls(kind, n, tuple(entries))

    @classmethod
    def group_element(cls, kind: GroupKind, z: Sequence[Scalar]) -> "DiagonalWeights":
        """
        Z from its free eigenvalues: n of them (orthogonal / symplectic) or N
        of them (general linear).

        Raises:
            DimensionMismatchError: Wrong number of eigenvalues
            ZeroDivisionError: A zero eigenvalue for orthogonal / symplectic
        """
        z = [Fraction(v) for v in z]
        if kind.family is GroupFamily.GENERAL_LINEAR:
            if len(z) != kind.N:
                raise DimensionMismatchError(f"GL_{kind.N} needs {kind.N} eigenvalues, got {len(z)}")
            return cls(kind, values=tuple(z))
        if len(z) != kind.n:
            raise DimensionMismatchError(f"{kind} needs n = {kind.n} eigenvalues, got {len(z)}")
        values = list(z)
        if kind.N % 2:
            values.append(Fraction(1))
        values += [1 / v for v in reversed(z)]
        return cls(kind, values=tuple(values))

    @classmethod
    def identity(cls, kind: GroupKind) -> "DiagonalWeights":
        return cls(kind, values=tuple(Fraction(1) for _ in range(kind.N)))


def _check(operator: TensorOperator, weights: DiagonalWeights) -> None:
    if operator.N != weights.kind.N:
        raise DimensionMismatchError(
            f"Operator on (C^{operator.N})^⊗{operator.m} paired with weights for N = {weights.kind.N}"
        )


def trace_against_diagonal(operator: TensorOperator, weights: DiagonalWeights) -> Union[MultiPoly, Fraction]:
    """
    tr A·W1···Wm: a MultiPoly in the weight variables for symbolic weights,
    a Fraction for concrete ones.

    Raises:
        DimensionMismatchError: Operator and weights disagree on N
    """
    _check(operator, weights)
    N, m = operator.N, operator.m
    diagonal = operator.matrix.diagonal_entries()

    if not weights.is_symbolic:
        total = Fraction(0)
        for index, value in diagonal.items():
            term = Fraction(value)
            for i in decode(index, N, m):
                term *= weights.values[i]
            total += term
        return total

    terms: Dict[Tuple[int, ...], Fraction] = {}
    for index, value in diagonal.items():
        exps = [0] * weights.nvars
        sign = 1
        for i in decode(index, N, m):
            entry = weights.symbolic[i]
            if entry is None:
                sign = 0
                break
            sign *= entry[0]
            exps[entry[1]] += 1
        if not sign:
            continue
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + sign * Fraction(value)
    return MultiPoly(weights.nvars, terms)


__all__ = ["DiagonalWeights", "trace_against_diagonal"]
