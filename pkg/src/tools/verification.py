"""
Verification Suites

Module: src.tools.verification
Purpose: Named property checks over small ranges, run by the `verify` verb
Status: Complete
Created: 2026-10-17

Suites:
- relations:   Brauer relations at several ω, JM commutativity, the JM
               recursion identities, basis counts, and the representation
               homomorphism property
- idempotents: E_T idempotent and orthogonal, JM eigenvalues, partial
               traces, centrality of φ_λ, the P/Q trace identities
- dims:        tr E_T against the hook dimension formulas; duality
- charmap:     closed form against the trace oracle, pruning, the
               row/column closed forms, ch(χ_λ) = s_λ
- symfunc:     double Schur vanishing, factorizations, zero sequence

A failing check records its counterexample in `detail`; suites never raise.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.brauer.diagram import BrauerDiagram, all_diagrams, count_basis
from src.brauer.element import BrauerElement
from src.brauer.generators import eps, jm_element, s
from src.charmap.oracle import central_character_element, ch_oracle, gl_characteristic
from src.charmap.theorem import ch_theorem, normalized_symmetrizer
from src.exactmath.rational import format_rational
from src.exactmath.sparse import SparseMatrix
from src.groups.dimensions import duality_check, partial_trace_ratio, trace_dimension
from src.symfunc.double_schur import column_product, column_value, double_schur, row_value
from src.symfunc.schur import schur
from src.symfunc.sequences import VALID_EPSILONS, ParameterSequence
from src.tensorrep.group_kind import GroupKind
from src.tensorrep.idempotents import IdempotentBuilder
from src.tensorrep.operator import TensorOperator, extend_matrix
from src.tensorrep.represent import contraction_matrix, represent, swap_matrix
from src.tensorrep.weights import DiagonalWeights, trace_against_diagonal
from src.tools.inputs import builder_for
from src.utils.config import ComputeSettings
from src.utils.constants import (
    DEFAULT_MAX_M,
    HOMOMORPHISM_TRIALS,
    VERIFY_DIMENSION_N,
    VERIFY_GL_N,
    VERIFY_IDEMPOTENT_ORTHOGONAL_N,
    VERIFY_IDEMPOTENT_SYMPLECTIC_N,
    VERIFY_OMEGAS,
    VERIFY_ORTHOGONAL_N,
    VERIFY_SYMPLECTIC_N,
)
from src.young.partition import Partition, SkewShape, partitions_of
from src.young.tableau import dim_skew, standard_tableaux

logger = logging.getLogger(__name__)

SUITES = ("relations", "idempotents", "dims", "charmap", "symfunc")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    suite: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "checks": [check.to_dict() for check in self.checks],
            "passed": self.passed,
        }


Outcome = Tuple[bool, str]


def _run_check(name: str, body: Callable[[], Outcome]) -> Check:
    try:
        passed, detail = body()
    except (ValueError, ZeroDivisionError, RuntimeError, KeyError) as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    if not passed:
        logger.warning("Check failed: %s (%s)", name, detail)
    return Check(name, passed, detail)


def _equal(left: Any, right: Any) -> Outcome:
    if left == right:
        return True, ""
    return False, f"{left} != {right}"


class VerificationRunner:
    """
    Runs the suites over configurable ranges.

    Example:
        runner = VerificationRunner(max_m=3)
        report = runner.run("relations")
    """

    def __init__(
        self,
        settings: Optional[ComputeSettings] = None,
        max_m: int = DEFAULT_MAX_M,
        orthogonal_N: Sequence[int] = VERIFY_ORTHOGONAL_N,
        symplectic_N: Sequence[int] = VERIFY_SYMPLECTIC_N,
        dimension_N: Sequence[int] = VERIFY_DIMENSION_N,
        idempotent_orthogonal_N: Sequence[int] = VERIFY_IDEMPOTENT_ORTHOGONAL_N,
        idempotent_symplectic_N: Sequence[int] = VERIFY_IDEMPOTENT_SYMPLECTIC_N,
        gl_N: Sequence[int] = VERIFY_GL_N,
        trials: int = HOMOMORPHISM_TRIALS,
    ):
        self.settings = settings or ComputeSettings()
        self.max_m = max_m
        self.orthogonal_N = tuple(orthogonal_N)
        self.symplectic_N = tuple(symplectic_N)
        self.dimension_N = tuple(dimension_N)
        self.idempotent_orthogonal_N = tuple(idempotent_orthogonal_N)
        self.idempotent_symplectic_N = tuple(idempotent_symplectic_N)
        self.gl_N = tuple(gl_N)
        self.trials = trials
        self._builders: Dict[GroupKind, IdempotentBuilder] = {}

    def builder(self, kind: GroupKind) -> IdempotentBuilder:
        if kind not in self._builders:
            self._builders[kind] = builder_for(kind, self.settings)
        return self._builders[kind]

    def run(self, suite: str) -> VerificationReport:
        """
        Raises:
            ValueError: Unknown suite name
        """
        if suite == "all":
            report = VerificationReport("all")
            for name in SUITES:
                report.checks.extend(self.run(name).checks)
            return report
        if suite not in SUITES:
            raise ValueError(f"Unknown suite: '{suite}'. Must be one of: {', '.join(SUITES + ('all',))}")
        logger.info("Verification suite '%s' started (max m = %d)", suite, self.max_m)
        checks = getattr(self, f"_suite_{suite}")()
        report = VerificationReport(suite, checks)
        logger.info(
            "Verification suite '%s' finished: %d checks, %d failed",
            suite, len(report.checks), len(report.failures),
        )
        return report

    # ------------------------------------------------------------------
    # Shape ranges
    # ------------------------------------------------------------------

    def _shapes(self, kind: GroupKind, sizes: Sequence[int]) -> List[Partition]:
        return [
            shape
            for m in sizes
            for shape in partitions_of(m)
            if kind.shape_bound_ok(shape)
        ]

    def _brauer_kinds(self, orthogonal: Sequence[int], symplectic: Sequence[int]) -> List[GroupKind]:
        return [GroupKind.orthogonal(N) for N in orthogonal] + [GroupKind.symplectic(N) for N in symplectic]

    # ------------------------------------------------------------------
    # relations
    # ------------------------------------------------------------------

    def _suite_relations(self) -> List[Check]:
        checks: List[Check] = []
        for omega in VERIFY_OMEGAS:
            label = format_rational(omega)
            for m in range(2, self.max_m + 1):
                checks.append(_run_check(f"brauer relations m={m} ω={label}", lambda m=m, o=omega: self._relations(m, o)))
                checks.append(_run_check(f"JM commutativity m={m} ω={label}", lambda m=m, o=omega: self._jm_commute(m, o)))
                checks.append(_run_check(f"JM recursion m={m} ω={label}", lambda m=m, o=omega: self._jm_recursion(m, o)))
        for m in range(1, max(self.max_m, 5) + 1):
            checks.append(_run_check(
                f"basis count m={m}",
                lambda m=m: _equal((count_basis(m), sum(1 for _ in all_diagrams(m))), (_double_factorial(m),) * 2),
            ))
        checks.append(_run_check("representation homomorphism", self._homomorphism))
        return checks

    def _relations(self, m: int, omega: Fraction) -> Outcome:
        one = BrauerElement.identity(m, omega)
        for a in range(1, m):
            sa, ea = s(a, m, omega), eps(a, m, omega)
            rules = [
                ("s^2 = 1", sa * sa, one),
                ("e^2 = ωe", ea * ea, ea * omega),
                ("e s = e", ea * sa, ea),
                ("s e = e", sa * ea, ea),
            ]
            if a + 1 < m:
                sb, eb = s(a + 1, m, omega), eps(a + 1, m, omega)
                rules += [
                    ("braid", sa * sb * sa, sb * sa * sb),
                    ("e e' e = e", ea * eb * ea, ea),
                    ("e' e e' = e'", eb * ea * eb, eb),
                    ("s e' e = s' e", sa * eb * ea, sb * ea),
                    ("e e' s = e s'", ea * eb * sa, ea * sb),
                ]
            for b in range(a + 2, m):
                sb, eb = s(b, m, omega), eps(b, m, omega)
                rules += [
                    ("far s s", sa * sb, sb * sa),
                    ("far e e", ea * eb, eb * ea),
                    ("far e s", ea * sb, sb * ea),
                ]
            for rule, left, right in rules:
                if left != right:
                    return False, f"{rule} fails at a={a}: {left} != {right}"
        return True, ""

    def _jm_commute(self, m: int, omega: Fraction) -> Outcome:
        elements = [jm_element(b, m, omega) for b in range(1, m + 1)]
        for i in range(m):
            for j in range(i + 1, m):
                if elements[i] * elements[j] != elements[j] * elements[i]:
                    return False, f"x_{i + 1} and x_{j + 1} do not commute"
        top = elements[-1]
        for a in range(1, m - 1):
            for generator in (s(a, m, omega), eps(a, m, omega)):
                if top * generator != generator * top:
                    return False, f"x_{m} does not commute with {generator}"
        return True, ""

    def _jm_recursion(self, m: int, omega: Fraction) -> Outcome:
        # ε_{m-1} x_m = -ε_{m-1} x_{m-1} and s_{m-1} x_m = x_{m-1} s_{m-1} + 1 - ε_{m-1}
        sa, ea = s(m - 1, m, omega), eps(m - 1, m, omega)
        top, below = jm_element(m, m, omega), jm_element(m - 1, m, omega)
        if ea * top != ea * below * -1:
            return False, f"ε_{m - 1} x_{m} != -ε_{m - 1} x_{m - 1}"
        if sa * top != below * sa + BrauerElement.identity(m, omega) - ea:
            return False, f"s_{m - 1} x_{m} != x_{m - 1} s_{m - 1} + 1 - ε_{m - 1}"
        return True, ""

    def _homomorphism(self) -> Outcome:
        rng = random.Random(self.settings.rng_seed)
        kinds = [GroupKind.orthogonal(3), GroupKind.symplectic(2)]
        for trial in range(self.trials):
            kind = kinds[trial % len(kinds)]
            m = 1 + trial % self.max_m
            left = _random_element(rng, m, kind.omega)
            right = _random_element(rng, m, kind.omega)
            product = represent(left * right, kind)
            if product != represent(left, kind) @ represent(right, kind):
                return False, f"trial {trial} on {kind}: ({left})·({right})"
        return True, f"{self.trials} random pairs"

    # ------------------------------------------------------------------
    # idempotents
    # ------------------------------------------------------------------

    def _suite_idempotents(self) -> List[Check]:
        checks: List[Check] = []
        kinds = self._brauer_kinds(self.idempotent_orthogonal_N, self.idempotent_symplectic_N)
        kinds += [GroupKind.general_linear(N) for N in self.gl_N]
        sizes = range(1, self.max_m + 1)
        for kind in kinds:
            for shape in self._shapes(kind, sizes):
                checks.append(_run_check(f"E_T properties {shape} on {kind}", lambda k=kind, sh=shape: self._idempotent_properties(sh, k)))
                checks.append(_run_check(f"partial trace {shape} on {kind}", lambda k=kind, sh=shape: self._partial_traces(sh, k)))
                if kind.is_brauer:
                    checks.append(_run_check(f"φ central {shape} on {kind}", lambda k=kind, sh=shape: self._centrality(sh, k)))
                    checks.append(_run_check(f"multiple partial trace {shape} on {kind}", lambda k=kind, sh=shape: self._multiple_partial_trace(sh, k)))
        for kind in self._brauer_kinds((3,), (4,)):
            checks.append(_run_check(f"P/Q trace identities on {kind}", lambda k=kind: self._swap_contraction_identities(k)))
        return checks

    def _idempotent_properties(self, shape: Partition, kind: GroupKind) -> Outcome:
        builder = self.builder(kind)
        tableaux = standard_tableaux(shape)
        ops = [builder.primitive_idempotent(t) for t in tableaux]
        jm = [builder.jm_operator(b, shape.size) for b in range(1, shape.size + 1)]
        for tableau, op in zip(tableaux, ops):
            if op @ op != op:
                return False, f"E_T^2 != E_T for T = {tableau}"
            for b, (x, c) in enumerate(zip(jm, tableau.contents(kind.omega)), start=1):
                if x @ op != op.scale(c) or op @ x != op.scale(c):
                    return False, f"x_{b} E_T != {c} E_T for T = {tableau}"
        for i in range(len(ops)):
            for j in range(len(ops)):
                if i != j and not (ops[i] @ ops[j]).is_zero():
                    return False, f"E_T E_T' != 0 for T = {tableaux[i]}, T' = {tableaux[j]}"
        return True, f"{len(ops)} tableaux"

    def _partial_traces(self, shape: Partition, kind: GroupKind) -> Outcome:
        builder = self.builder(kind)
        for tableau in standard_tableaux(shape):
            op = builder.primitive_idempotent(tableau)
            if op.trace() != trace_dimension(shape, kind):
                return False, f"tr E_T = {op.trace()} for T = {tableau}"
            if tableau.m < 2:
                continue
            smaller = tableau.remove_last()
            expected = builder.primitive_idempotent(smaller).scale(partial_trace_ratio(shape, smaller.shape, kind))
            if op.partial_trace(tableau.m) != expected:
                return False, f"tr_m E_T is not a multiple of E_U for T = {tableau}"
        return True, ""

    def _centrality(self, shape: Partition, kind: GroupKind) -> Outcome:
        phi = self.builder(kind).central_idempotent(shape)
        m = shape.size
        scaled = phi.scale(trace_dimension(shape, kind))
        if scaled @ scaled != scaled:
            return False, "D·φ is not idempotent"
        for a in range(1, m):
            for generator in (s(a, m, kind.omega), eps(a, m, kind.omega)):
                if not phi.commutes_with(represent(generator, kind)):
                    return False, f"φ does not commute with {generator}"
        return True, ""

    def _multiple_partial_trace(self, shape: Partition, kind: GroupKind) -> Outcome:
        builder = self.builder(kind)
        phi = builder.central_idempotent(shape)
        m = shape.size
        for k in range(1, m):
            traced = phi.multiple_partial_trace(range(k + 1, m + 1))
            expected = TensorOperator.zero(kind.N, k)
            for mu in partitions_of(k):
                if shape.contains(mu) and kind.shape_bound_ok(mu):
                    expected = expected + builder.central_idempotent(mu).scale(dim_skew(SkewShape(shape, mu)))
            if traced != expected:
                return False, f"tr_{{{k + 1}..{m}}} φ_{shape} differs from Σ dim(λ/μ) φ_μ"
        return True, ""

    def _swap_contraction_identities(self, kind: GroupKind) -> Outcome:
        N = kind.N
        identity = SparseMatrix.identity(N)
        for name, matrix in (("P", swap_matrix(1, 2, N, 2)), ("Q", contraction_matrix(1, 2, kind, 2))):
            if TensorOperator(N, 2, matrix).partial_trace(1).matrix != identity:
                return False, f"tr_1 {name}_12 != 1"
        rng = random.Random(self.settings.rng_seed)
        X = SparseMatrix.from_dense([[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(N)] for _ in range(N)])
        X1 = extend_matrix(X, N)
        Q = contraction_matrix(1, 2, kind, 2)
        if Q @ X1 @ Q != Q.scale(X.trace()):
            return False, "Q X_1 Q != tr(X) Q"
        return True, ""

    # ------------------------------------------------------------------
    # dims
    # ------------------------------------------------------------------

    def _suite_dims(self) -> List[Check]:
        checks: List[Check] = []
        sizes = range(1, self.max_m + 1)
        for N in self.dimension_N:
            kinds = [GroupKind.orthogonal(N), GroupKind.general_linear(N)]
            if N % 2 == 0:
                kinds.append(GroupKind.symplectic(N))
            for kind in kinds:
                for shape in self._shapes(kind, sizes):
                    checks.append(_run_check(f"trace = dimension {shape} on {kind}", lambda k=kind, sh=shape: self._trace_dimension(sh, k)))
            for shape in (p for m in sizes for p in partitions_of(m)):
                checks.append(_run_check(f"duality {shape} N={N}", lambda sh=shape, N=N: (duality_check(sh, N), "")))
        return checks

    def _trace_dimension(self, shape: Partition, kind: GroupKind) -> Outcome:
        tableau = standard_tableaux(shape)[0]
        op = self.builder(kind).primitive_idempotent(tableau)
        value = trace_against_diagonal(op, DiagonalWeights.identity(kind))
        return _equal(value, trace_dimension(shape, kind))

    # ------------------------------------------------------------------
    # charmap
    # ------------------------------------------------------------------

    def _suite_charmap(self) -> List[Check]:
        checks: List[Check] = []
        sizes = range(2, self.max_m + 1)
        for kind in self._brauer_kinds(self.orthogonal_N, self.symplectic_N):
            for shape in self._shapes(kind, sizes):
                checks.append(_run_check(f"theorem = oracle {shape} on {kind}", lambda k=kind, sh=shape: self._theorem_oracle(sh, k)))
                if shape.size % 2 == 0:
                    checks.append(_run_check(
                        f"pruning invariance {shape} on {kind}",
                        lambda k=kind, sh=shape: _equal(ch_theorem(sh, k), ch_theorem(sh, k, prune=False)),
                    ))
            for l in range(1, self.max_m // 2 + 1):
                for anti in (False, True):
                    shape = Partition((1,) * (2 * l)) if anti else Partition((2 * l,))
                    if kind.shape_bound_ok(shape):
                        checks.append(_run_check(
                            f"closed form {'A' if anti else 'S'}^({2 * l}) on {kind}",
                            lambda k=kind, sh=shape, l=l, anti=anti: _equal(
                                ch_theorem(sh, k).expansion.terms, normalized_symmetrizer(l, k, anti).expansion.terms
                            ),
                        ))
        for N in self.gl_N:
            for shape in (p for m in range(1, min(self.max_m, 3) + 1) for p in partitions_of(m)):
                checks.append(_run_check(f"ch(χ_λ) = s_λ {shape} GL_{N}", lambda sh=shape, N=N: self._gl_character(sh, N)))
        return checks

    def _theorem_oracle(self, shape: Partition, kind: GroupKind) -> Outcome:
        theorem = ch_theorem(shape, kind)
        oracle = ch_oracle(shape, kind, builder=self.builder(kind))
        if theorem == oracle:
            return True, str(theorem.expansion)
        return False, f"theorem {theorem.expansion} vs oracle {oracle.expansion}"

    def _gl_character(self, shape: Partition, N: int) -> Outcome:
        expansion = gl_characteristic(central_character_element(shape), N)
        expected = {shape: Fraction(1)} if shape.length <= N else {}
        return _equal(expansion.terms, expected)

    # ------------------------------------------------------------------
    # symfunc
    # ------------------------------------------------------------------

    def _suite_symfunc(self) -> List[Check]:
        checks: List[Check] = []
        n = 4
        small = [p for size in range(0, 5) for p in partitions_of(size, max_rows=n)]
        for epsilon in VALID_EPSILONS:
            a = ParameterSequence(epsilon)
            label = format_rational(epsilon)
            checks.append(_run_check(f"vanishing ε={label}", lambda a=a: _vanishing(a, n, small)))
            checks.append(_run_check(f"row factorization ε={label}", lambda a=a: _row_factorization(a, n)))
            checks.append(_run_check(f"column factorization ε={label}", lambda a=a: _column_factorization(a, n)))
        checks.append(_run_check("zero sequence gives Schur", lambda: _zero_sequence(n, small)))
        return checks


# ----------------------------------------------------------------------
# Helpers
# ----------------------------------------------------------------------


def _double_factorial(m: int) -> int:
    result = 1
    for k in range(1, 2 * m, 2):
        result *= k
    return result


def _random_element(rng: random.Random, m: int, omega: Fraction) -> BrauerElement:
    diagrams = list(all_diagrams(m))
    terms: Dict[BrauerDiagram, Fraction] = {}
    for diagram in rng.sample(diagrams, min(3, len(diagrams))):
        terms[diagram] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return BrauerElement(m, omega, terms)


def _vanishing(a: ParameterSequence, n: int, shapes: List[Partition]) -> Outcome:
    for nu in shapes:
        poly = double_schur(nu, n, a)
        for rho in shapes:
            value = poly.at_rho(rho)
            if not rho.contains(nu) and value:
                return False, f"s_{nu}(a_{rho}) = {value}, expected 0"
            if rho == nu and not value:
                return False, f"s_{nu}(a_{nu}) = 0"
    return True, ""


def _row_factorization(a: ParameterSequence, n: int) -> Outcome:
    for l in (1, 2):
        poly = double_schur(Partition((l,)), n, a)
        for k in range(l, 2 * l + 1):
            value = poly.at_rho(Partition((k,)))
            if value != row_value(l, k, n, a):
                return False, f"s_({l})(a_({k})) = {value} != {row_value(l, k, n, a)}"
    return True, ""


def _column_factorization(a: ParameterSequence, n: int) -> Outcome:
    for l in (1, 2):
        poly = double_schur(Partition((1,) * l), n, a)
        for k in range(l, min(2 * l, n) + 1):
            value = poly.at_rho(Partition((1,) * k))
            if not value == column_value(l, k, n, a) == column_product(l, k, n, a):
                return False, f"s_(1^{l})(a_(1^{k})) = {value} != {column_value(l, k, n, a)}"
    return True, ""


def _zero_sequence(n: int, shapes: List[Partition]) -> Outcome:
    zero = ParameterSequence.zero()
    for nu in shapes:
        if double_schur(nu, n, zero).to_polynomial() != schur(nu, n).poly:
            return False, f"s_{nu}(x | 0) != s_{nu}(x)"
    return True, ""


__all__ = ["Check", "SUITES", "VerificationReport", "VerificationRunner"]
