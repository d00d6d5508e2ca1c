"""
Primitive and Central Idempotents

Module: src.tensorrep.idempotents
Purpose: E_T by the Jucys-Murphy recurrence, and the central idempotents φ_λ
Status: Complete
Created: 2026-10-17

The recurrence E_T = E_U·(u - c_m)/(u - x_m) at u = c_m is evaluated as a
spectral projection. Inside image(E_U ⊗ 1) the operator x_m is
diagonalizable; its eigenvalues are read off the minimal polynomial of x_m
on Krylov vectors seeded from random columns of E_U, and

    E_T = E_U · Π_{d ≠ c_m} (x_m - d)/(c_m - d).

All products run on integer matrices: 2·x_m has integer entries, and every
intermediate projector is kept as (rational scale, primitive integer
matrix). The result is checked by x_m·E_T = c_m·E_T; if a random seed
missed an eigenvalue the check fails and another seed is added.

Projectors are cached by the row sequence of the tableau, so tableaux
sharing a prefix share its work.
"""

import logging
import random
from fractions import Fraction
from math import ceil
from typing import Dict, List, Tuple

from src.brauer.generators import jm_element, symmetric_jm_element
from src.exactmath.sparse import SparseMatrix, Vector, minimal_polynomial
from src.groups.dimensions import trace_dimension
from src.tensorrep.group_kind import GroupKind
from src.tensorrep.operator import TensorOperator, check_size, extend_matrix
from src.tensorrep.represent import represent
from src.utils.constants import DEFAULT_MAX_DIMENSION, DEFAULT_RNG_SEED
from src.utils.exceptions import SpectrumError
from src.young.partition import Partition
from src.young.tableau import StandardTableau, standard_tableaux

logger = logging.getLogger(__name__)

# Krylov seeds per attempt, and attempts before giving up
SEEDS_PER_ATTEMPT = 2
MAX_ATTEMPTS = 4

Scaled = Tuple[Fraction, SparseMatrix]


class IdempotentBuilder:
    """
    Builds E_T for one group kind, caching shared prefixes.

    Example:
        builder = IdempotentBuilder(GroupKind.orthogonal(6))
        E = builder.primitive_idempotent(StandardTableau.from_rows((1, 1, 2, 2)))
    """

    def __init__(
        self,
        kind: GroupKind,
        max_dimension: int = DEFAULT_MAX_DIMENSION,
        force_large: bool = False,
        rng_seed: int = DEFAULT_RNG_SEED,
    ):
        self.kind = kind
        self.max_dimension = max_dimension
        self.force_large = force_large
        self._rng = random.Random(rng_seed)
        self._projectors: Dict[Tuple[int, ...], Scaled] = {}
        self._twice_jm: Dict[Tuple[int, int], SparseMatrix] = {}
        self.spectra: Dict[Tuple[int, ...], List[Fraction]] = {}

    # ------------------------------------------------------------------
    # Jucys-Murphy operators
    # ------------------------------------------------------------------

    def jm_operator(self, b: int, m: int) -> TensorOperator:
        """x_b acting on (C^N)^⊗m."""
        if self.kind.is_brauer:
            element = jm_element(b, m, self.kind.omega)
        else:
            element = symmetric_jm_element(b, m)
        return represent(element, self.kind)

    def _doubled_jm(self, b: int, m: int) -> SparseMatrix:
        key = (b, m)
        if key not in self._twice_jm:
            self._twice_jm[key] = self.jm_operator(b, m).matrix.map(lambda value: int(2 * value))
        return self._twice_jm[key]

    def _spectrum_bound(self, m: int) -> int:
        """Bound on |2c| for every eigenvalue c of x_m."""
        omega = self.kind.omega
        if omega is None:
            return 2 * m
        return ceil(abs(omega - 1)) + 2 * m

    # ------------------------------------------------------------------
    # Recurrence
    # ------------------------------------------------------------------

    def _random_seed(self, projector: SparseMatrix) -> Vector:
        dim = projector.dim
        vector = {i: self._rng.randint(-97, 97) for i in range(dim)}
        return projector.apply(vector)

    def _build(self, rows: Tuple[int, ...]) -> Scaled:
        if rows in self._projectors:
            return self._projectors[rows]

        N = self.kind.N
        m = len(rows)
        if m == 1:
            result: Scaled = (Fraction(1), SparseMatrix.identity(N))
            self._projectors[rows] = result
            return result

        scale_u, base_u = self._build(rows[:-1])
        lifted = extend_matrix(base_u, N)
        twice_x = self._doubled_jm(m, m)
        target = 2 * StandardTableau.from_rows(rows).contents(self.kind.omega)[-1]
        if target.denominator != 1:
            raise SpectrumError(f"Content {target / 2} is not a half-integer")
        target = int(target)

        seeds = [self._random_seed(lifted) for _ in range(SEEDS_PER_ATTEMPT)]
        for attempt in range(1, MAX_ATTEMPTS + 1):
            roots = self._eigenvalues(twice_x, seeds, m, rows)
            if target not in roots:
                logger.debug("Content missing for rows %s (attempt %d); adding a seed", rows, attempt)
                seeds.append(self._random_seed(lifted))
                continue
            product = lifted
            denominator = 1
            for root in roots:
                if root == target:
                    continue
                shifted = twice_x - SparseMatrix.identity(twice_x.dim, root)
                product = product @ shifted
                denominator *= target - root
                content, product = product.primitive_part()
                denominator = Fraction(denominator) / content
            if product @ twice_x == product.scale(target):
                scale = scale_u / denominator
                self.spectra[rows] = [Fraction(r, 2) for r in roots]
                logger.info(
                    "Built E_T for rows %s on %s: spectrum %s, nnz %d",
                    rows, self.kind, [str(Fraction(r, 2)) for r in roots], product.nnz,
                )
                self._projectors[rows] = (scale, product)
                return scale, product
            logger.debug("Eigenvalue check failed for rows %s (attempt %d); adding a seed", rows, attempt)
            seeds.append(self._random_seed(lifted))

        raise SpectrumError(
            f"x_{m} has no consistent spectrum on image(E_U) containing c_{m} = {Fraction(target, 2)} "
            f"for rows {rows}"
        )

    def _eigenvalues(self, twice_x: SparseMatrix, seeds: List[Vector], m: int, rows: Tuple[int, ...]) -> List[int]:
        """
        Raises:
            SpectrumError: A repeated root (x_m not diagonalizable) or no split
        """
        poly = minimal_polynomial(twice_x, seeds)
        roots = poly.half_integer_roots(self._spectrum_bound(m))
        if len(set(roots)) != len(roots):
            raise SpectrumError(f"Repeated eigenvalue of 2x_{m} for rows {rows}: {poly}")
        return [int(root) for root in roots]

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------

    def primitive_idempotent(self, tableau: StandardTableau) -> TensorOperator:
        """
        Raises:
            ShapeBoundError: Shape outside the group's bound
            SizeGuardError: N^m above the limit
            SpectrumError: Internal inconsistency of the spectrum
        """
        if tableau.m < 1:
            raise ValueError("Tableaux need at least one box")
        self.kind.check_shape(tableau.shape)
        check_size(self.kind.N, tableau.m, self.max_dimension, self.force_large)
        scale, matrix = self._build(tableau.rows)
        return TensorOperator(self.kind.N, tableau.m, matrix.scale(scale))

    def idempotent_sum(self, shape: Partition) -> TensorOperator:
        """Σ_T E_T over the standard tableaux of `shape`."""
        total = TensorOperator.zero(self.kind.N, shape.size)
        for tableau in standard_tableaux(shape):
            total = total + self.primitive_idempotent(tableau)
        return total

    def central_idempotent(self, shape: Partition) -> TensorOperator:
        """
        φ_λ = (1/D)·Σ_T E_T with D = D(λ) (orthogonal) or D(λ') (symplectic);
        for the general linear group the plain sum Σ_T E_T.
        """
        total = self.idempotent_sum(shape)
        if not self.kind.is_brauer:
            return total
        return total.scale(1 / trace_dimension(shape, self.kind))


def primitive_idempotent(tableau: StandardTableau, kind: GroupKind, **options) -> TensorOperator:
    return IdempotentBuilder(kind, **options).primitive_idempotent(tableau)


def central_idempotent(shape: Partition, kind: GroupKind, **options) -> TensorOperator:
    return IdempotentBuilder(kind, **options).central_idempotent(shape)


__all__ = ["IdempotentBuilder", "central_idempotent", "primitive_idempotent"]
