"""Chevalley-Eilenberg cochains on Hamiltonian vector fields and the central-extension checks.

Cochains take values in the trivial representation R, and

    (delta c)(v_1, ..., v_{k+1}) = sum_{i<j} (-1)^{i+j} c([v_i, v_j], v_1, ..^i..^j.., v_{k+1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Optional, Sequence

from .algebra import Q, Rational, RationalFunction
from .errors import NotClosed, NotHamiltonian, RationalCoefficientUnsupported
from .exterior import DifferentialForm, VectorField, d, form_eval, iota, poincare_potential, vf_bracket
from .lie2 import Lie2AlgebraHandle, Lie2Morphism
from .plectic import PlecticStructure, hamiltonian_vf, semi_bracket
from .report import Report


def require_hamiltonian_field(P: PlecticStructure, v: VectorField):
    """On R^n a field is Hamiltonian iff i_v omega is closed."""
    residual = d(iota(v, P.omega))
    if not residual.is_zero():
        raise NotHamiltonian(residual)


@dataclass(frozen=True)
class CECochain:
    arity: int
    evaluator: Callable[..., Rational]
    name: str = "c"
    structure: Optional[PlecticStructure] = None

    def __call__(self, *vs: VectorField) -> Rational:
        if len(vs) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} arguments, got {len(vs)}")
        return self.evaluator(*vs)

    def antisymmetry_defects(self, vs: Sequence[VectorField]) -> list:
        """Values of c(sigma v) - sign(sigma) c(v) over all permutations; all zero iff alternating."""
        base = self(*vs)
        out = []
        for perm in permutations(range(self.arity)):
            inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
            sign = -1 if inversions % 2 else 1
            out.append(self(*(vs[p] for p in perm)) - sign * base)
        return out


@dataclass(frozen=True)
class PathSegment:
    start: tuple
    end: tuple

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(Q(c) for c in self.start))
        object.__setattr__(self, "end", tuple(Q(c) for c in self.end))
        if len(self.start) != len(self.end):
            raise ValueError("segment endpoints have different dimensions")


def value_at(value, point) -> Rational:
    if isinstance(value, DifferentialForm):
        value = value.scalar()
    if isinstance(value, RationalFunction):
        return value.evaluate(point)
    return Q(value)


def Jx(P: PlecticStructure, x: Sequence) -> CECochain:
    """J_x(v1, v2, v3) = i_v1 i_v2 i_v3 omega at x, i.e. omega(v3, v2, v1)(x)."""
    point = tuple(Q(c) for c in x)

    def evaluate(v1, v2, v3):
        return value_at(form_eval(P.omega, [v3, v2, v1]), point)

    return CECochain(3, evaluate, name=f"J_{tuple(map(str, point))}", structure=P)


def ce_delta(c: CECochain, vs: Sequence[VectorField]) -> Rational:
    vs = list(vs)
    if len(vs) != c.arity + 1:
        raise ValueError(f"delta of a {c.arity}-cochain takes {c.arity + 1} arguments, got {len(vs)}")
    if c.structure is not None:
        for v in vs:
            require_hamiltonian_field(c.structure, v)
    total = Q(0)
    n = len(vs)
    for i in range(n):
        for j in range(i + 1, n):
            rest = [v for k, v in enumerate(vs) if k != i and k != j]
            term = c(vf_bracket(vs[i], vs[j]), *rest)
            total = total - term if (i + j) % 2 else total + term
    return total


def ce_delta_cochain(c: CECochain) -> CECochain:
    return CECochain(c.arity + 1, lambda *vs: ce_delta(c, vs), name=f"delta {c.name}", structure=c.structure)


def line_integral(a: DifferentialForm, seg: PathSegment) -> Rational:
    """Exact integral of a polynomial 1-form along the straight segment."""
    if a.degree != 1:
        raise ValueError("line integrals take 1-forms")
    if not a.is_polynomial():
        raise RationalCoefficientUnsupported("exact path integration needs polynomial coefficients")
    direction = [b - s for s, b in zip(seg.start, seg.end)]
    total = Q(0)
    for (i,), coeff in a.coeffs.items():
        if direction[i] == 0:
            continue
        for k, ck in enumerate(coeff.num.on_line(seg.start, direction)):
            total += ck * direction[i] / (k + 1)
    return total


def path_cochain(P: PlecticStructure, seg: PathSegment) -> CECochain:
    """c(v, w) = integral over the segment of omega(v, w, .)."""

    def evaluate(v, w):
        return line_integral(iota(w, iota(v, P.omega)), seg)

    return CECochain(2, evaluate, name="path", structure=P)


def verify_coboundary_relation(P: PlecticStructure, x, y, v1, v2, v3) -> Report:
    for v in (v1, v2, v3):
        require_hamiltonian_field(P, v)
    seg = PathSegment(x, y)
    r = Report("point dependence of the Jacobiator cocycle")
    r.check("extension.coboundary", "J_y - J_x = delta(path cochain)",
            lambda: Jx(P, seg.end)(v1, v2, v3) - Jx(P, seg.start)(v1, v2, v3),
            lambda: ce_delta(path_cochain(P, seg), [v1, v2, v3]))
    return r


def lie2_of_xham(P: PlecticStructure, x) -> Lie2AlgebraHandle:
    """Hamiltonian fields and R with d = 0, the Lie bracket, and Jacobiator J_x."""
    J = Jx(P, x)
    zero = Q(0)
    return Lie2AlgebraHandle(
        name="hamiltonian-fields-at-point",
        differential=lambda r: P.chart.zero_field(),
        bracket00=vf_bracket,
        bracket01=lambda v, r: zero,
        jacobiator=lambda a, b, c: J(a, b, c),
        zero1=zero,
        member0=lambda v: require_hamiltonian_field(P, v),
    )


def ev_morphism(P: PlecticStructure, x) -> Lie2Morphism:
    """p(alpha) = v_alpha, ev_x(f) = f(x), trivial homotopy."""
    point = tuple(Q(c) for c in x)
    zero = Q(0)
    return Lie2Morphism(
        phi0=lambda a: hamiltonian_vf(P, a),
        phi1=lambda f: value_at(f, point),
        Phi=lambda a, b: zero,
        name="evaluation",
    )


def centrality_check(P: PlecticStructure, alpha: DifferentialForm, beta: DifferentialForm) -> Report:
    r = Report("closed forms are central")
    r.check("central.closed", "d alpha = 0", lambda: d(alpha))
    r.check("central.left", "{alpha, beta} = 0", lambda: semi_bracket(P, alpha, beta))
    r.check("central.right", "{beta, alpha} = 0", lambda: semi_bracket(P, beta, alpha))
    return r


def bu1_witness(P: PlecticStructure, alpha: DifferentialForm) -> Report:
    """A closed 1-form lies in ker p and is exact; the potential is stored as a witness."""
    da = d(alpha)
    if not da.is_zero():
        raise NotClosed(da)
    f = poincare_potential(alpha)
    r = Report("closed 1-forms are exact")
    r.check("bu1.kernel", "v_alpha = 0", lambda: hamiltonian_vf(P, alpha))
    r.check("bu1.exact", "d(potential) = alpha", lambda: d(f), lambda: alpha)
    r.witnesses["potential"] = f
    return r
