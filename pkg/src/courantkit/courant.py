"""The split exact Courant algebroid TM + T*M twisted by a closed 3-form.

A section is a pair (v, alpha) standing for s(v) + alpha in the canonical
splitting.  With the symmetric pairing <e1, e2>_+ = i_v1 a2 + i_v2 a1 and
twist omega the brackets are

    courant(e1, e2) = ([v1, v2], L_v1 a2 - L_v2 a1 - 1/2 d<e1, e2>_- - i_v2 i_v1 omega)
    dorfman(e1, e2) = ([v1, v2], L_v1 a2 - i_v2 d a1 - i_v2 i_v1 omega)

and the canonical splitting has curvature -omega.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Q
from .errors import ChartMismatch, DegreeMismatch, MembershipViolation, NotClosed
from .exterior import Chart, DifferentialForm, VectorField, d, iota, lie_derivative, vf_bracket
from .lie2 import Lie2AlgebraHandle
from .report import Report

HALF = Q("1/2")


@dataclass(frozen=True)
class GeneralizedSection:
    v: VectorField
    alpha: DifferentialForm

    def __post_init__(self):
        if self.v.chart != self.alpha.chart:
            raise ChartMismatch("vector and form parts live on different charts")
        if self.alpha.degree != 1:
            raise DegreeMismatch("the form part of a section is a 1-form")

    @property
    def chart(self) -> Chart:
        return self.v.chart

    @classmethod
    def lift(cls, v: VectorField) -> "GeneralizedSection":
        """s(v) in the canonical splitting."""
        return cls(v, v.chart.zero_form(1))

    @classmethod
    def cotangent(cls, alpha: DifferentialForm) -> "GeneralizedSection":
        return cls(alpha.chart.zero_field(), alpha)

    @classmethod
    def zero(cls, chart: Chart) -> "GeneralizedSection":
        return cls(chart.zero_field(), chart.zero_form(1))

    def is_zero(self) -> bool:
        return self.v.is_zero() and self.alpha.is_zero()

    def __add__(self, other):
        if not isinstance(other, GeneralizedSection):
            return NotImplemented
        return GeneralizedSection(self.v + other.v, self.alpha + other.alpha)

    def __sub__(self, other):
        if not isinstance(other, GeneralizedSection):
            return NotImplemented
        return GeneralizedSection(self.v - other.v, self.alpha - other.alpha)

    def __neg__(self):
        return GeneralizedSection(-self.v, -self.alpha)

    def scale(self, f) -> "GeneralizedSection":
        return GeneralizedSection(self.v.scale(f), self.alpha.scale(f))

    def __str__(self):
        return f"({self.v}, {self.alpha})"


@dataclass(frozen=True)
class SplitCourantModel:
    chart: Chart
    twist: DifferentialForm

    def __post_init__(self):
        if self.twist.chart != self.chart:
            raise ChartMismatch("twist lives on a different chart")
        if self.twist.degree != 3:
            raise DegreeMismatch("the twist is a 3-form")
        dw = d(self.twist)
        if not dw.is_zero():
            raise NotClosed(dw)

    @classmethod
    def standard(cls, chart: Chart) -> "SplitCourantModel":
        return cls(chart, chart.zero_form(3))

    def section(self, v: VectorField, alpha: DifferentialForm) -> GeneralizedSection:
        e = GeneralizedSection(v, alpha)
        self._own(e)
        return e

    def _own(self, *sections):
        for e in sections:
            if e.chart != self.chart:
                raise ChartMismatch("section lives on a different chart than the model")


@dataclass(frozen=True)
class SplittingShift:
    B: DifferentialForm

    def __post_init__(self):
        if self.B.degree != 2:
            raise DegreeMismatch("a splitting shift is a 2-form")


@dataclass(frozen=True)
class Yes:
    def __bool__(self):
        return True


@dataclass(frozen=True)
class No:
    certificate: DifferentialForm

    def __bool__(self):
        return False


def pairing_plus(e1: GeneralizedSection, e2: GeneralizedSection) -> DifferentialForm:
    if e1.chart != e2.chart:
        raise ChartMismatch("sections live on different charts")
    return iota(e1.v, e2.alpha) + iota(e2.v, e1.alpha)


def pairing_minus(e1: GeneralizedSection, e2: GeneralizedSection) -> DifferentialForm:
    if e1.chart != e2.chart:
        raise ChartMismatch("sections live on different charts")
    return iota(e1.v, e2.alpha) - iota(e2.v, e1.alpha)


def anchor(e: GeneralizedSection) -> VectorField:
    return e.v


def D_func(f: DifferentialForm) -> GeneralizedSection:
    """D f = rho^* d f = (0, df)."""
    if f.degree != 0:
        raise DegreeMismatch("D acts on functions")
    return GeneralizedSection.cotangent(d(f))


def twisted_courant(model: SplitCourantModel, e1: GeneralizedSection, e2: GeneralizedSection) -> GeneralizedSection:
    model._own(e1, e2)
    v1, a1, v2, a2 = e1.v, e1.alpha, e2.v, e2.alpha
    form = (lie_derivative(v1, a2) - lie_derivative(v2, a1)
            - d(pairing_minus(e1, e2)).scale(HALF) - iota(v2, iota(v1, model.twist)))
    return GeneralizedSection(vf_bracket(v1, v2), form)


def twisted_dorfman(model: SplitCourantModel, e1: GeneralizedSection, e2: GeneralizedSection) -> GeneralizedSection:
    model._own(e1, e2)
    v1, a1, v2, a2 = e1.v, e1.alpha, e2.v, e2.alpha
    form = lie_derivative(v1, a2) - iota(v2, d(a1)) - iota(v2, iota(v1, model.twist))
    return GeneralizedSection(vf_bracket(v1, v2), form)


def T_tri(model: SplitCourantModel, e1, e2, e3) -> DifferentialForm:
    br = lambda a, b: twisted_courant(model, a, b)
    total = (pairing_plus(br(e1, e2), e3) + pairing_plus(br(e3, e1), e2)
             + pairing_plus(br(e2, e3), e1))
    return total.scale(Q("1/6"))


def curvature(model: SplitCourantModel, v1, v2, v3) -> DifferentialForm:
    """<[s v1, s v2], s v3>_+ for the canonical splitting."""
    s = GeneralizedSection.lift
    return pairing_plus(twisted_courant(model, s(v1), s(v2)), s(v3))


def change_splitting(shift: SplittingShift, e: GeneralizedSection) -> GeneralizedSection:
    """Coordinates of e relative to the splitting (s + B)(v) = s(v) + i_v B."""
    if shift.B.chart != e.chart:
        raise ChartMismatch("shift lives on a different chart")
    return GeneralizedSection(e.v, e.alpha - iota(e.v, shift.B))


def restore_splitting(shift: SplittingShift, e: GeneralizedSection) -> GeneralizedSection:
    """Inverse of change_splitting."""
    return GeneralizedSection(e.v, e.alpha + iota(e.v, shift.B))


def shifted_twist(model: SplitCourantModel, shift: SplittingShift) -> DifferentialForm:
    """Twist of the bracket written in the shifted frame.

    The curvature of s + B is -omega + dB, so the new twist is omega - dB.
    """
    return model.twist - d(shift.B)


def shifted_curvature(model: SplitCourantModel, shift: SplittingShift, v1, v2, v3) -> DifferentialForm:
    """<[(s+B) v1, (s+B) v2], (s+B) v3>_+ computed in the original frame."""
    lift = lambda v: restore_splitting(shift, GeneralizedSection.lift(v))
    return pairing_plus(twisted_courant(model, lift(v1), lift(v2)), lift(v3))


def verify_courant_axioms(model: SplitCourantModel, e1, e2, e3, f, g) -> Report:
    """Both axiom systems and the interchange relation, checked exactly."""
    model._own(e1, e2, e3)
    C = lambda a, b: twisted_courant(model, a, b)
    Dor = lambda a, b: twisted_dorfman(model, a, b)
    P = pairing_plus
    rho = anchor
    half = lambda x: x.scale(HALF)
    Df, Dg = D_func(f), D_func(g)
    r = Report("Courant algebroid axioms")

    r.check("courant.jacobi", "[e1,[e2,e3]] - [[e1,e2],e3] - [e2,[e1,e3]] = -D T",
            lambda: C(e1, C(e2, e3)) - C(C(e1, e2), e3) - C(e2, C(e1, e3)),
            lambda: -D_func(T_tri(model, e1, e2, e3)))
    r.check("courant.anchor", "rho[e1,e2] = [rho e1, rho e2]",
            lambda: rho(C(e1, e2)), lambda: vf_bracket(rho(e1), rho(e2)))
    r.check("courant.leibniz", "[e1, f e2] = f[e1,e2] + rho(e1)(f) e2 - 1/2 <e1,e2> Df",
            lambda: C(e1, e2.scale(f)),
            lambda: C(e1, e2).scale(f) + e2.scale(rho(e1).apply(f)) - half(Df.scale(P(e1, e2))))
    r.check("courant.exact-isotropic", "<Df, Dg> = 0", lambda: P(Df, Dg))
    r.check("courant.invariance", "rho(e1)<e2,e3> = <[e1,e2] + 1/2 D<e1,e2>, e3> + <e2, [e1,e3] + 1/2 D<e1,e3>>",
            lambda: rho(e1).apply(P(e2, e3)),
            lambda: (P(C(e1, e2) + half(D_func(P(e1, e2))), e3)
                     + P(e2, C(e1, e3) + half(D_func(P(e1, e3))))))

    r.check("dorfman.jacobi", "[[e1,[[e2,e3]]]] = [[[[e1,e2]],e3]] + [[e2,[[e1,e3]]]]",
            lambda: Dor(e1, Dor(e2, e3)), lambda: Dor(Dor(e1, e2), e3) + Dor(e2, Dor(e1, e3)))
    r.check("dorfman.anchor", "rho[[e1,e2]] = [rho e1, rho e2]",
            lambda: rho(Dor(e1, e2)), lambda: vf_bracket(rho(e1), rho(e2)))
    r.check("dorfman.leibniz", "[[e1, f e2]] = f[[e1,e2]] + rho(e1)(f) e2",
            lambda: Dor(e1, e2.scale(f)),
            lambda: Dor(e1, e2).scale(f) + e2.scale(rho(e1).apply(f)))
    r.check("dorfman.square", "[[e1,e1]] = 1/2 D<e1,e1>",
            lambda: Dor(e1, e1), lambda: half(D_func(P(e1, e1))))
    r.check("dorfman.invariance", "rho(e1)<e2,e3> = <[[e1,e2]],e3> + <e2,[[e1,e3]]>",
            lambda: rho(e1).apply(P(e2, e3)), lambda: P(Dor(e1, e2), e3) + P(e2, Dor(e1, e3)))
    r.check("dorfman.interchange", "[[e1,e2]] = [e1,e2] + 1/2 D<e1,e2>",
            lambda: Dor(e1, e2), lambda: C(e1, e2) + half(D_func(P(e1, e2))))
    return r


def preservation_certificate(model: SplitCourantModel, e: GeneralizedSection) -> DifferentialForm:
    return d(e.alpha) + iota(e.v, model.twist)


def preserves_splitting(model: SplitCourantModel, e: GeneralizedSection) -> Yes | No:
    """Whether [[e, s(v')]] = s([v, v']) for every v'; decided by d(alpha) + i_v omega = 0."""
    model._own(e)
    cert = preservation_certificate(model, e)
    return Yes() if cert.is_zero() else No(cert)


def preserves_against(model: SplitCourantModel, e: GeneralizedSection, probe: VectorField) -> GeneralizedSection:
    """Defect [[e, s(v')]] - s([v, v']) for one probe field v'."""
    s = GeneralizedSection.lift
    return twisted_dorfman(model, e, s(probe)) - s(vf_bracket(e.v, probe))


def lie2_of_courant(model: SplitCourantModel) -> Lie2AlgebraHandle:
    zero0 = model.chart.zero_form(0)
    return Lie2AlgebraHandle(
        name="courant-sections",
        differential=D_func,
        bracket00=lambda a, b: twisted_courant(model, a, b),
        bracket01=lambda e, f: pairing_plus(e, D_func(f)).scale(HALF),
        jacobiator=lambda a, b, c: -T_tri(model, a, b, c),
        zero1=zero0,
    )


def lie2_of_preserving(model: SplitCourantModel) -> Lie2AlgebraHandle:
    """The sub Lie 2-algebra of splitting-preserving sections; membership is enforced."""
    base = lie2_of_courant(model)

    def member(e):
        verdict = preserves_splitting(model, e)
        if not verdict:
            raise MembershipViolation(verdict.certificate)

    def bracket(a, b):
        out = twisted_courant(model, a, b)
        member(out)  # closure of the subspace under the bracket
        return out

    return Lie2AlgebraHandle(
        name="preserving-sections",
        differential=base.differential,
        bracket00=bracket,
        bracket01=base.bracket01,
        jacobiator=base.jacobiator,
        zero1=base.zero1,
        member0=member,
    )
