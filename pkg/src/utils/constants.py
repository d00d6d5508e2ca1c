"""
Application Constants

Module: src.utils.constants
Purpose: Defaults and verification grids shared by the tools and tests
Status: Complete
Created: 2026-10-17
"""

from fractions import Fraction

# Largest tensor space N^m built without --force-large
DEFAULT_MAX_DIMENSION = 10**6

# Brauer parameters used for the abstract relation checks
VERIFY_OMEGAS = (Fraction(3), Fraction(-4), Fraction(7, 2))

# Group sizes for the theorem-vs-oracle sweep
VERIFY_ORTHOGONAL_N = (5, 6)
VERIFY_SYMPLECTIC_N = (6,)

# Group sizes for the trace-vs-dimension-formula sweep
VERIFY_DIMENSION_N = (4, 5, 6)

# Smaller groups for the idempotent checks, which square N^m-dimensional matrices
VERIFY_IDEMPOTENT_ORTHOGONAL_N = (3, 4)
VERIFY_IDEMPOTENT_SYMPLECTIC_N = (4,)
VERIFY_GL_N = (2, 3)

# Random element pairs for the homomorphism check
HOMOMORPHISM_TRIALS = 100

# Default maximum number of boxes in verification sweeps
DEFAULT_MAX_M = 4

# Seed for every pseudo-random choice (Krylov seeds, random elements)
DEFAULT_RNG_SEED = 0

__all__ = [
    "DEFAULT_MAX_DIMENSION",
    "VERIFY_OMEGAS",
    "VERIFY_ORTHOGONAL_N",
    "VERIFY_SYMPLECTIC_N",
    "VERIFY_DIMENSION_N",
    "VERIFY_IDEMPOTENT_ORTHOGONAL_N",
    "VERIFY_IDEMPOTENT_SYMPLECTIC_N",
    "VERIFY_GL_N",
    "HOMOMORPHISM_TRIALS",
    "DEFAULT_MAX_M",
    "DEFAULT_RNG_SEED",
]
