"""
Tensor Representation

Package: src.tensorrep
Purpose: B_m(±N) and C[S_m] acting on (C^N)^⊗m: operators, idempotents, traces
Status: Complete

Submodules:

- src.tensorrep.group_kind: GroupFamily, GroupKind
- src.tensorrep.operator: TensorOperator, size guard, partial traces
- src.tensorrep.represent: represent, diagram_matrix
- src.tensorrep.weights: DiagonalWeights, trace_against_diagonal
- src.tensorrep.idempotents: IdempotentBuilder, primitive_idempotent, central_idempotent
"""

__all__ = []
