"""The symplectic mirror: the Lie algebroid TM + R over a 2-form.

Sections are s(v) + f with bracket

    [s(v1) + f1, s(v2) + f2] = s([v1, v2]) + v1(f2) - v2(f1) - omega(v1, v2)

and f -> s(v_f) + f carries the Poisson bracket {f, g} = omega(v_f, v_g) to it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Q
from .courant import No, Yes
from .errors import ChartMismatch, DegreeMismatch
from .exterior import DifferentialForm, VectorField, d, form_eval, iota, vf_bracket
from .extension import CECochain, ce_delta, value_at
from .plectic import PlecticStructure, hamiltonian_vf
from .report import Report


@dataclass(frozen=True)
class AtiyahSection:
    v: VectorField
    f: DifferentialForm

    def __post_init__(self):
        if self.f.degree != 0:
            raise DegreeMismatch("the R-component is a function")
        if self.v.chart != self.f.chart:
            raise ChartMismatch("components live on different charts")

    @property
    def chart(self):
        return self.v.chart

    @classmethod
    def lift(cls, v: VectorField) -> "AtiyahSection":
        return cls(v, v.chart.zero_form(0))

    def is_zero(self) -> bool:
        return self.v.is_zero() and self.f.is_zero()

    def __add__(self, other):
        return AtiyahSection(self.v + other.v, self.f + other.f)

    def __sub__(self, other):
        return AtiyahSection(self.v - other.v, self.f - other.f)

    def __neg__(self):
        return AtiyahSection(-self.v, -self.f)

    def __str__(self):
        return f"({self.v}, {self.f})"


def symplectic(omega2) -> PlecticStructure:
    P = omega2 if isinstance(omega2, PlecticStructure) else PlecticStructure(omega2.chart, omega2)
    if P.n != 1:
        raise DegreeMismatch("expected a 2-form")
    P.require_nondegenerate()
    return P


def _function(P: PlecticStructure, f) -> DifferentialForm:
    if isinstance(f, DifferentialForm):
        return f
    return DifferentialForm.function(P.chart, f)


def sympl_hamiltonian_vf(omega2, f) -> VectorField:
    """The v_f with df = -i_{v_f} omega."""
    P = symplectic(omega2)
    return hamiltonian_vf(P, _function(P, f))


def poisson(omega2, f, g) -> DifferentialForm:
    P = symplectic(omega2)
    return DifferentialForm.function(
        P.chart, form_eval(P.omega, [sympl_hamiltonian_vf(P, f), sympl_hamiltonian_vf(P, g)]))


def phi(omega2, f) -> AtiyahSection:
    """f -> s(v_f) + f."""
    P = symplectic(omega2)
    f = _function(P, f)
    return AtiyahSection(sympl_hamiltonian_vf(P, f), f)


def atiyah_bracket(omega2, a1: AtiyahSection, a2: AtiyahSection) -> AtiyahSection:
    omega = omega2.omega if isinstance(omega2, PlecticStructure) else omega2
    if a1.chart != omega.chart or a2.chart != omega.chart:
        raise ChartMismatch("sections and 2-form live on different charts")
    f = a1.v.apply(a2.f) - a2.v.apply(a1.f) - iota(a2.v, iota(a1.v, omega))
    return AtiyahSection(vf_bracket(a1.v, a2.v), f)


def atiyah_preserves(omega2, a: AtiyahSection) -> Yes | No:
    """[a, s(v')] = s([v, v']) for all v' iff df + i_v omega = 0."""
    omega = omega2.omega if isinstance(omega2, PlecticStructure) else omega2
    cert = d(a.f) + iota(a.v, omega)
    return Yes() if cert.is_zero() else No(cert)


def ks_cocycle(omega2, x) -> CECochain:
    """c(v, w) = -omega(v, w) at x."""
    P = symplectic(omega2)
    point = tuple(Q(c) for c in x)

    def evaluate(v, w):
        return -value_at(form_eval(P.omega, [v, w]), point)

    return CECochain(2, evaluate, name="ks", structure=P)


def ks_delta_check(omega2, x, v1, v2, v3) -> Report:
    c = ks_cocycle(omega2, x)
    r = Report("symplectic 2-cocycle")
    r.check("ks.cocycle", "delta c = 0", lambda: ce_delta(c, [v1, v2, v3]))
    return r


def verify_poisson_iso(omega2, f, g) -> Report:
    """The bracket is preserved by f -> s(v_f) + f, and the image preserves the splitting."""
    P = symplectic(omega2)
    r = Report("Poisson algebra inside the Atiyah algebroid")
    r.check("atiyah.bracket-preserved", "[phi f, phi g] = phi{f,g}",
            lambda: atiyah_bracket(P, phi(P, f), phi(P, g)), lambda: phi(P, poisson(P, f, g)))
    for name, h in (("f", f), ("g", g)):
        r.check(f"atiyah.image-preserves-{name}", "d h + i_{v_h} omega = 0",
                lambda h=h: _certificate(P, phi(P, h)))
    return r


def _certificate(P, a):
    verdict = atiyah_preserves(P, a)
    return P.chart.zero_form(1) if verdict else verdict.certificate

