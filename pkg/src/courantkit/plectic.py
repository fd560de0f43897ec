"""n-plectic structures, Hamiltonian forms, the semi-bracket and the Jacobiator.

A form alpha of degree n-1 is Hamiltonian when d(alpha) = -iota_v(omega) for
some vector field v.  For n = 2 the semi-bracket {a, b} = iota_vb iota_va omega
and J(a, b, c) = iota_va iota_vb iota_vc omega assemble into a Lie 2-algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product

from .algebra import Q
from .errors import DegenerateStructure, DegreeMismatch, NoPrimitive, NotClosed, NotHamiltonian
from .exterior import (Chart, DifferentialForm, VectorField, d, iota, lie_derivative,
                       poincare_potential, vf_bracket)
from .lie2 import Lie2AlgebraHandle
from .linalg import Inconsistent, Unique, RFMatrix, determinant, rank, solve_linear
from .report import Report


@dataclass(frozen=True)
class CertifiedEverywhere:
    minor_rows: tuple[int, ...]
    minor: object


@dataclass(frozen=True)
class GenericOnly:
    minor_rows: tuple[int, ...]
    minor: object


@dataclass(frozen=True)
class DegenerateAt:
    point: tuple
    kernel: VectorField


Verdict = CertifiedEverywhere | GenericOnly | DegenerateAt


@dataclass(frozen=True, eq=True)
class PlecticStructure:
    chart: Chart
    omega: DifferentialForm

    def __post_init__(self):
        if self.omega.chart != self.chart:
            raise ValueError("omega lives on a different chart")
        if self.omega.degree < 2:
            raise DegreeMismatch("an n-plectic form has degree n+1 >= 2")
        dw = d(self.omega)
        if not dw.is_zero():
            raise NotClosed(dw)

    @property
    def n(self) -> int:
        return self.omega.degree - 1

    @cached_property
    def row_indices(self) -> list[tuple[int, ...]]:
        return list(combinations(range(self.chart.dimension), self.n))

    @cached_property
    def contraction_matrix(self) -> RFMatrix:
        """Matrix of v -> iota_v omega: rows are basis n-forms, columns coordinates."""
        cols = [iota(self.chart.partial(c), self.omega) for c in self.chart.coordinates]
        rows = [[col.coefficient(I) for col in cols] for I in self.row_indices]
        return RFMatrix(self.chart.coordinates, rows)

    @cached_property
    def verdict(self) -> Verdict:
        return check_nondegenerate(self)

    def require_nondegenerate(self):
        if isinstance(self.verdict, DegenerateAt):
            v = self.verdict
            raise DegenerateStructure(f"omega is degenerate at {tuple(map(str, v.point))}; kernel {v.kernel}")

    def __hash__(self):
        return hash((self.chart, self.omega))


def _sample_points(dim: int, count: int = 64, seed: int = 0):
    yield tuple(Q(0) for _ in range(dim))
    if 3 ** dim <= count:
        for p in product((-1, 0, 1), repeat=dim):
            yield tuple(Q(c) for c in p)
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(Q(rng.randint(-5, 5)) for _ in range(dim))


def _kernel_field(chart: Chart, M: RFMatrix):
    res = solve_linear(M, [0] * M.nrows)
    return VectorField(chart, res.kernel[0])


def check_nondegenerate(P: PlecticStructure) -> Verdict:
    """Classify v -> iota_v omega as injective everywhere, generically, or not at some point."""
    chart, M = P.chart, P.contraction_matrix
    dim = chart.dimension
    if rank(M) < dim:
        kernel = _kernel_field(chart, M)
        for pt in _sample_points(dim):
            try:
                if not all(c == 0 for c in kernel.at(pt)):
                    return DegenerateAt(pt, kernel)
            except ZeroDivisionError:
                continue
        return DegenerateAt(tuple(Q(0) for _ in range(dim)), kernel)
    witness = None
    for rows in combinations(range(M.nrows), dim):
        det = determinant(M.submatrix(rows, range(dim)))
        if det.is_zero():
            continue
        if det.is_constant():
            return CertifiedEverywhere(rows, det)
        if witness is None:
            witness = (rows, det)
    for pt in _sample_points(dim):
        at = RFMatrix((), M.evaluate(pt))
        if rank(at) < dim:
            k = solve_linear(at, [0] * at.nrows).kernel[0]
            return DegenerateAt(pt, VectorField(chart, [c.constant_value() for c in k]))
    return GenericOnly(*witness)


@lru_cache(maxsize=4096)
def hamiltonian_vf(P: PlecticStructure, alpha: DifferentialForm) -> VectorField:
    """The unique v with d(alpha) = -iota_v(omega)."""
    P.require_nondegenerate()
    if alpha.degree != P.n - 1:
        raise DegreeMismatch(f"Hamiltonian forms have degree {P.n - 1}, got {alpha.degree}")
    if alpha.chart != P.chart:
        raise ValueError("alpha lives on a different chart")
    da = d(alpha)
    if da.is_zero():
        return P.chart.zero_field()
    rhs = [-da.coefficient(I) for I in P.row_indices]
    res = solve_linear(P.contraction_matrix, rhs)
    if isinstance(res, Inconsistent):
        raise NotHamiltonian(da + iota(VectorField(P.chart, res.partial), P.omega))
    return VectorField(P.chart, res.solution if isinstance(res, Unique) else res.particular)


def is_hamiltonian(P: PlecticStructure, alpha: DifferentialForm) -> bool:
    try:
        hamiltonian_vf(P, alpha)
        return True
    except NotHamiltonian:
        return False


def hamiltonian_form_of(P: PlecticStructure, v: VectorField) -> DifferentialForm:
    """Some alpha with d(alpha) = -iota_v(omega), via the radial homotopy."""
    contraction = iota(v, P.omega)
    residual = d(contraction)
    if not residual.is_zero():
        raise NoPrimitive(residual)
    if contraction.is_zero():
        return P.chart.zero_form(P.n - 1)
    return poincare_potential(-contraction)


def semi_bracket(P: PlecticStructure, alpha, beta) -> DifferentialForm:
    va, vb = hamiltonian_vf(P, alpha), hamiltonian_vf(P, beta)
    return iota(vb, iota(va, P.omega))


def jacobiator_J(P: PlecticStructure, alpha, beta, gamma) -> DifferentialForm:
    va, vb, vc = (hamiltonian_vf(P, a) for a in (alpha, beta, gamma))
    return iota(va, iota(vb, iota(vc, P.omega)))


def _skew(v1, a1, v2, a2) -> DifferentialForm:
    return iota(v1, a2) - iota(v2, a1)


def verify_semibracket(P: PlecticStructure, alpha, beta, gamma) -> Report:
    """Closure, skew-symmetry and Jacobi-up-to-exact for the semi-bracket."""
    w = P.omega
    va, vb = hamiltonian_vf(P, alpha), hamiltonian_vf(P, beta)
    br = lambda a, b: semi_bracket(P, a, b)
    r = Report("semi-bracket properties")
    r.check("semi-bracket.hamiltonian", "d{a,b} = -i[va,vb] w",
            lambda: d(br(alpha, beta)), lambda: -iota(vf_bracket(va, vb), w))
    r.check("semi-bracket.skew", "{a,b} = -{b,a}", lambda: br(alpha, beta), lambda: -br(beta, alpha))
    r.check("semi-bracket.jacobi-up-to-exact", "{a,{b,c}} - {{a,b},c} - {b,{a,c}} = d J(a,b,c)",
            lambda: br(alpha, br(beta, gamma)) - br(br(alpha, beta), gamma) - br(beta, br(alpha, gamma)),
            lambda: d(jacobiator_J(P, alpha, beta, gamma)))
    return r


def verify_calculus(P: PlecticStructure, alpha, beta, gamma) -> Report:
    """The three Lie-derivative identities used to build the embedding morphism."""
    w = P.omega
    va, vb, vc = (hamiltonian_vf(P, a) for a in (alpha, beta, gamma))
    br = lambda a, b: semi_bracket(P, a, b)
    r = Report("Hamiltonian calculus identities")
    r.check("calculus.lie-derivative", "L_va b = {a,b} + d i_va b",
            lambda: lie_derivative(va, beta), lambda: br(alpha, beta) + d(iota(va, beta)))

    def cyclic():
        lhs = (iota(vf_bracket(va, vb), gamma) + iota(vf_bracket(vc, va), beta)
               + iota(vf_bracket(vb, vc), alpha))
        rhs = (iota(va, iota(vb, iota(vc, w))).scale(-3)
               + iota(va, d(_skew(vb, beta, vc, gamma)))
               + iota(vc, d(_skew(va, alpha, vb, beta)))
               + iota(vb, d(_skew(vc, gamma, va, alpha))))
        return lhs - rhs

    r.check("calculus.cyclic-bracket", "i[va,vb] c + cyclic = -3 J + contracted skew pairings", cyclic)
    r.check("calculus.lie-difference", "L_va b - L_vb a = 2{a,b} + d<va+a, vb+b>_-",
            lambda: lie_derivative(va, beta) - lie_derivative(vb, alpha),
            lambda: br(alpha, beta).scale(2) + d(_skew(va, alpha, vb, beta)))
    return r


def lie2_of_plectic(P: PlecticStructure) -> Lie2AlgebraHandle:
    """Hamiltonian 1-forms and functions with the semi-bracket and J."""
    if P.n != 2:
        raise DegreeMismatch("the Lie 2-algebra is built from a 2-plectic form")
    P.require_nondegenerate()
    zero0 = P.chart.zero_form(0)

    def member(alpha):
        hamiltonian_vf(P, alpha)

    return Lie2AlgebraHandle(
        name="hamiltonian-forms",
        differential=d,
        bracket00=lambda a, b: semi_bracket(P, a, b),
        bracket01=lambda a, f: zero0,
        jacobiator=lambda a, b, c: jacobiator_J(P, a, b, c),
        zero1=zero0,
        member0=member,
    )
