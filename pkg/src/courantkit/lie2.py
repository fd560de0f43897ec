"""Lie 2-algebras given behaviourally, and exact checkers for their axioms.

A Lie 2-algebra is a two-term complex L1 --d--> L0 with a skew bracket that
is a chain map and a skew Jacobiator J: L0^3 -> L1 with

    dJ(x, y, z) = [x, [y, z]] - [[x, y], z] - [y, [x, z]]

plus the quaternary coherence law.  All spaces here are infinite
dimensional, so a handle is a bundle of maps that the checkers evaluate on
supplied elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

from .errors import DegreeMismatch
from .report import Report


@dataclass(frozen=True)
class Lie2Element:
    degree: int
    payload: Any

    def __post_init__(self):
        if self.degree not in (0, 1, 2):
            raise DegreeMismatch(f"Lie 2-algebra elements live in degree 0 or 1, got {self.degree}")

    def is_zero(self) -> bool:
        if self.degree == 2:
            return True
        p = self.payload
        return p.is_zero() if hasattr(p, "is_zero") else p == 0

    def __sub__(self, other: "Lie2Element") -> "Lie2Element":
        if self.degree != other.degree:
            raise DegreeMismatch("cannot subtract elements of different degree")
        if self.degree == 2:
            return self
        return Lie2Element(self.degree, self.payload - other.payload)

    def __str__(self):
        return str(self.payload)


ZERO2 = Lie2Element(2, 0)


@dataclass(frozen=True)
class Lie2AlgebraHandle:
    """Structure maps on raw payloads.

    ``bracket01(x, f)`` is the mixed bracket [x, f]; [f, x] = -[x, f] and
    brackets of two degree-1 elements vanish.  ``member0`` optionally raises
    when a degree-0 input is outside the intended subspace.
    """

    name: str
    differential: Callable[[Any], Any]
    bracket00: Callable[[Any, Any], Any]
    bracket01: Callable[[Any, Any], Any]
    jacobiator: Callable[[Any, Any, Any], Any]
    zero1: Any = 0
    member0: Optional[Callable[[Any], None]] = None

    def element0(self, payload) -> Lie2Element:
        if self.member0 is not None:
            self.member0(payload)
        return Lie2Element(0, payload)

    def element1(self, payload) -> Lie2Element:
        return Lie2Element(1, payload)

    def d(self, el: Lie2Element) -> Lie2Element:
        if el.degree != 1:
            raise DegreeMismatch("the differential acts on degree-1 elements")
        return Lie2Element(0, self.differential(el.payload))

    def bracket(self, a: Lie2Element, b: Lie2Element) -> Lie2Element:
        match (a.degree, b.degree):
            case (0, 0):
                for x in (a.payload, b.payload):
                    if self.member0 is not None:
                        self.member0(x)
                return Lie2Element(0, self.bracket00(a.payload, b.payload))
            case (0, 1):
                return Lie2Element(1, self.bracket01(a.payload, b.payload))
            case (1, 0):
                return Lie2Element(1, -self.bracket01(b.payload, a.payload))
            case _:
                return ZERO2

    def J(self, a: Lie2Element, b: Lie2Element, c: Lie2Element) -> Lie2Element:
        if (a.degree, b.degree, c.degree) != (0, 0, 0):
            # components with a degree-1 argument land in degree 2, which is zero
            return ZERO2
        return Lie2Element(1, self.jacobiator(a.payload, b.payload, c.payload))


@dataclass(frozen=True)
class Lie2Morphism:
    phi0: Callable[[Any], Any]
    phi1: Callable[[Any], Any]
    Phi: Callable[[Any, Any], Any]
    name: str = "morphism"


def _payload(el, degree: int, what: str):
    if isinstance(el, Lie2Element):
        if el.degree != degree:
            raise DegreeMismatch(f"{what} must have degree {degree}, got {el.degree}")
        return el.payload
    return el


def check_L2A_axioms(L: Lie2AlgebraHandle, x, y, z, w, f=None, g=None) -> Report:
    """Exact checks of every Lie 2-algebra axiom on the given elements.

    ``x, y, z, w`` are degree 0; ``f, g`` are degree-1 test elements and
    default to J(x, y, z) and J(y, z, w).
    """
    x, y, z, w = (_payload(e, 0, n) for e, n in zip((x, y, z, w), "xyzw"))
    for e in (x, y, z, w):
        if L.member0 is not None:
            L.member0(e)
    b, m, J, dd = L.bracket00, L.bracket01, L.jacobiator, L.differential
    f = J(x, y, z) if f is None else _payload(f, 1, "f")
    g = J(y, z, w) if g is None else _payload(g, 1, "g")

    r = Report(f"Lie 2-algebra axioms: {L.name}")
    r.check("l2a.skew", "[x,y] = -[y,x]", lambda: b(x, y), lambda: -b(y, x))
    r.check("l2a.chain-map", "d[x,f] = [x,df]", lambda: dd(m(x, f)), lambda: b(x, dd(f)))
    r.check("l2a.chain-map-11", "[df,g] = [f,dg]", lambda: m(dd(f), g), lambda: -m(dd(g), f))
    r.check("l2a.J-skew-12", "J(x,y,z) = -J(y,x,z)", lambda: J(x, y, z), lambda: -J(y, x, z))
    r.check("l2a.J-skew-23", "J(x,y,z) = -J(x,z,y)", lambda: J(x, y, z), lambda: -J(x, z, y))
    r.check("l2a.homotopy-jacobi", "dJ(x,y,z) = [x,[y,z]] - [[x,y],z] - [y,[x,z]]",
            lambda: dd(J(x, y, z)),
            lambda: b(x, b(y, z)) - b(b(x, y), z) - b(y, b(x, z)))
    # degree-1 component of the homotopy condition: J(x,y,df) = [x,[y,f]] - [[x,y],f] - [y,[x,f]]
    r.check("l2a.homotopy-jacobi-mixed", "J(x,y,df) = [x,[y,f]] - [[x,y],f] - [y,[x,f]]",
            lambda: J(x, y, dd(f)),
            lambda: m(x, m(y, f)) - m(b(x, y), f) - m(y, m(x, f)))

    def coherence():
        # the mixed bracket [u, J] sits in degree 1; [J, u] = -[u, J]
        lhs = (m(x, J(y, z, w)) + J(x, b(y, z), w) + J(x, z, b(y, w))
               - m(w, J(x, y, z)) + m(z, J(x, y, w)))
        rhs = (J(x, y, b(z, w)) + J(b(x, y), z, w) + m(y, J(x, z, w))
               + J(y, b(x, z), w) + J(y, z, b(x, w)))
        return lhs - rhs

    r.check("l2a.coherence", "quaternary Jacobiator coherence", coherence)
    return r


def check_morphism(mor: Lie2Morphism, source: Lie2AlgebraHandle, target: Lie2AlgebraHandle,
                   x, y, z, f=None) -> Report:
    """Exact checks that (phi0, phi1, Phi) is a Lie 2-algebra morphism on (x, y, z, f)."""
    x, y, z = (_payload(e, 0, n) for e, n in zip((x, y, z), "xyz"))
    b, m, J, dd = source.bracket00, source.bracket01, source.jacobiator, source.differential
    b_, m_, J_, dd_ = target.bracket00, target.bracket01, target.jacobiator, target.differential
    p0, p1, Phi = mor.phi0, mor.phi1, mor.Phi
    f = J(x, y, z) if f is None else _payload(f, 1, "f")

    r = Report(f"morphism {mor.name}: {source.name} -> {target.name}")
    r.check("morphism.chain-square", "phi0(df) = d'phi1(f)", lambda: p0(dd(f)), lambda: dd_(p1(f)))
    r.check("morphism.homotopy-00", "phi0[x,y] - [phi0 x, phi0 y]' = d'Phi(x,y)",
            lambda: p0(b(x, y)) - b_(p0(x), p0(y)), lambda: dd_(Phi(x, y)))
    r.check("morphism.homotopy-01", "phi1[x,f] - [phi0 x, phi1 f]' = Phi(x,df)",
            lambda: p1(m(x, f)) - m_(p0(x), p1(f)), lambda: Phi(x, dd(f)))
    r.check("morphism.homotopy-10", "phi1[f,x] - [phi1 f, phi0 x]' = Phi(df,x)",
            lambda: -p1(m(x, f)) + m_(p0(x), p1(f)), lambda: Phi(dd(f), x))

    def coherence():
        lhs = p1(J(x, y, z)) - J_(p0(x), p0(y), p0(z))
        rhs = (Phi(x, b(y, z)) - Phi(b(x, y), z) - Phi(y, b(x, z))
               + m_(p0(z), Phi(x, y)) + m_(p0(x), Phi(y, z)) - m_(p0(y), Phi(x, z)))
        return lhs - rhs

    r.check("morphism.coherence", "phi1 J - J'(phi0^3) = Phi-coherence terms", coherence)
    return r


def identity_morphism(L: Lie2AlgebraHandle) -> Lie2Morphism:
    return Lie2Morphism(lambda a: a, lambda f: f, lambda a, b: L.zero1, name="identity")


def trivial_xham(chart) -> Lie2AlgebraHandle:
    """Hamiltonian vector fields as a Lie 2-algebra with L1 = 0 and J = 0."""
    from .algebra import Q
    from .exterior import vf_bracket

    zero = Q(0)
    return Lie2AlgebraHandle(
        name="trivial-xham",
        differential=lambda f: chart.zero_field(),
        bracket00=vf_bracket,
        bracket01=lambda v, f: zero,
        jacobiator=lambda u, v, w: zero,
        zero1=zero,
    )


def abelian_closed(chart) -> Lie2AlgebraHandle:
    """Functions --d--> closed 1-forms with all brackets and J zero."""
    from .errors import NotClosed
    from .exterior import d

    def member(a):
        da = d(a)
        if not da.is_zero():
            raise NotClosed(da)

    return Lie2AlgebraHandle(
        name="abelian-closed",
        differential=d,
        bracket00=lambda a, b: chart.zero_form(1),
        bracket01=lambda a, f: chart.zero_form(0),
        jacobiator=lambda a, b, c: chart.zero_form(0),
        zero1=chart.zero_form(0),
        member0=member,
    )
