"""Trivialization and Deligne-cocycle data on covers of R^n by open boxes.

Circle-valued transition functions are stored as exponents h with
g = exp(2 pi i h), so that g^-1 dg becomes dh (normalized) and the
multiplicative cocycle conditions become "the alternating sum of h is a
constant integer".  In real mode the functions are taken as they are.

Every identity is checked as a global polynomial identity, which on an open
box is equivalent to the identity on the box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .algebra import Q, Rational
from .atiyah import AtiyahSection
from .courant import GeneralizedSection, SplitCourantModel, SplittingShift, pairing_plus, shifted_twist, twisted_courant
from .exterior import Chart, DifferentialForm, d, iota, vf_bracket
from .report import Report

MODES = ("real", "circle")


@dataclass(frozen=True)
class Box:
    lower: tuple
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(Q(c) for c in self.lower))
        object.__setattr__(self, "upper", tuple(Q(c) for c in self.upper))
        if len(self.lower) != len(self.upper):
            raise ValueError("box corners have different dimensions")
        if not self.nonempty():
            raise ValueError(f"box {self} is empty")

    def nonempty(self) -> bool:
        return all(a < b for a, b in zip(self.lower, self.upper))

    def intersect(self, other: "Box") -> "Box | None":
        lo = tuple(max(a, b) for a, b in zip(self.lower, other.lower))
        hi = tuple(min(a, b) for a, b in zip(self.upper, other.upper))
        if all(a < b for a, b in zip(lo, hi)):
            return Box(lo, hi)
        return None

    def center(self) -> tuple[Rational, ...]:
        return tuple((a + b) / 2 for a, b in zip(self.lower, self.upper))

    def __str__(self):
        fmt = lambda p: "(" + ", ".join(str(c) for c in p) + ")"
        return f"{fmt(self.lower)} .. {fmt(self.upper)}"


@dataclass(frozen=True)
class BoxCover:
    chart: Chart
    boxes: Mapping[int, Box]

    def __post_init__(self):
        for label, box in self.boxes.items():
            if len(box.lower) != self.chart.dimension:
                raise ValueError(f"box {label} has the wrong dimension")

    @property
    def labels(self) -> list[int]:
        return sorted(self.boxes)

    def region(self, labels: Sequence[int]) -> Box | None:
        box = self.boxes[labels[0]]
        for lab in labels[1:]:
            box = box.intersect(self.boxes[lab])
            if box is None:
                return None
        return box

    def overlaps(self, k: int) -> list[tuple[int, ...]]:
        """Sorted k-fold label tuples whose boxes meet in a nonempty open box."""
        return [c for c in combinations(self.labels, k) if self.region(c) is not None]


@dataclass
class LocalData1:
    theta: dict = field(default_factory=dict)
    h: dict = field(default_factory=dict)


@dataclass
class LocalData2:
    B: dict = field(default_factory=dict)
    A: dict = field(default_factory=dict)
    h: dict = field(default_factory=dict)


def _alternating(values: Sequence):
    total = values[0]
    for k, v in enumerate(values[1:], start=1):
        total = total - v if k % 2 else total + v
    return total


def _face(data: Mapping, labels: tuple[int, ...]):
    """Alternating sum over the faces of a label tuple, e.g. h_jk - h_ik + h_ij."""
    faces = [labels[:k] + labels[k + 1:] for k in range(len(labels))]
    missing = [f for f in faces if f not in data]
    if missing:
        return None, missing
    return _alternating([data[f] for f in faces]), []


def _label(labels) -> str:
    return ",".join(str(i) for i in labels)


def _check_keys(r: Report, cover: BoxCover, data: Mapping, k: int, what: str):
    valid = set(cover.overlaps(k)) if k > 1 else {(i,) for i in cover.labels}
    for key in data:
        key_t = key if isinstance(key, tuple) else (key,)
        if key_t not in valid:
            r.record(f"{what}[{_label(key_t)}].declared", "data sits on a nonempty overlap", False,
                     "no such overlap")


def _check_integral_constant(r: Report, name: str, anchor: str, value: DifferentialForm, mode: str):
    dv = d(value)
    if not dv.is_zero():
        r.record(name, anchor, False, str(dv))
        return
    c = value.scalar().constant_value() if not value.is_zero() else Q(0)
    if mode == "circle" and c.denominator != 1:
        r.record(name, anchor, False, f"non-integral constant {c}")
        return
    r.record(name, anchor, True)


def verify_triv_2form(cover: BoxCover, omega2: DifferentialForm, data: LocalData1, mode: str = "real") -> Report:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    r = Report(f"trivialization of a closed 2-form ({mode})")
    _check_keys(r, cover, data.theta, 1, "theta")
    _check_keys(r, cover, data.h, 2, "h")
    for i in cover.labels:
        name = f"triv.potential[{i}]"
        if i not in data.theta:
            r.record(name, "omega = d theta_i", False, "missing")
            continue
        r.check(name, "omega = d theta_i", lambda i=i: d(data.theta[i]), omega2)
    for ij in cover.overlaps(2):
        i, j = ij
        name = f"triv.transition[{_label(ij)}]"
        if ij not in data.h or i not in data.theta or j not in data.theta:
            r.record(name, "theta_j - theta_i = dh_ij", False, "missing")
            continue
        r.check(name, "theta_j - theta_i = dh_ij",
                lambda ij=ij: d(data.h[ij]), lambda i=i, j=j: data.theta[j] - data.theta[i])
    for ijk in cover.overlaps(3):
        name = f"triv.cocycle[{_label(ijk)}]"
        anchor = "h_jk - h_ik + h_ij is constant" + (" and integral" if mode == "circle" else "")
        value, missing = _face(data.h, ijk)
        if missing:
            r.record(name, anchor, False, "missing")
            continue
        _check_integral_constant(r, name, anchor, value, mode)
    return r


def verify_triv_3form(cover: BoxCover, omega3: DifferentialForm, data: LocalData2, mode: str = "circle") -> Report:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    r = Report(f"Deligne data for a closed 3-form ({mode})")
    _check_keys(r, cover, data.B, 1, "B")
    _check_keys(r, cover, data.A, 2, "A")
    _check_keys(r, cover, data.h, 3, "h")
    for i in cover.labels:
        name = f"deligne.curving[{i}]"
        if i not in data.B:
            r.record(name, "omega = dB_i", False, "missing")
            continue
        r.check(name, "omega = dB_i", lambda i=i: d(data.B[i]), omega3)
    for ij in cover.overlaps(2):
        i, j = ij
        name = f"deligne.connection[{_label(ij)}]"
        if ij not in data.A or i not in data.B or j not in data.B:
            r.record(name, "B_j - B_i = dA_ij", False, "missing")
            continue
        r.check(name, "B_j - B_i = dA_ij", lambda ij=ij: d(data.A[ij]), lambda i=i, j=j: data.B[j] - data.B[i])
        # the local splittings v - i_v B_i glue: their twists agree on the overlap
        M0 = SplitCourantModel.standard(cover.chart)
        r.check(f"deligne.splitting[{_label(ij)}]", "twist seen from box i = twist seen from box j",
                lambda i=i: shifted_twist(M0, SplittingShift(-data.B[i])),
                lambda j=j: shifted_twist(M0, SplittingShift(-data.B[j])))
    for ijk in cover.overlaps(3):
        name = f"deligne.transition[{_label(ijk)}]"
        value, missing = _face(data.A, ijk)
        if missing or ijk not in data.h:
            r.record(name, "A_jk - A_ik + A_ij = dh_ijk", False, "missing")
            continue
        r.check(name, "A_jk - A_ik + A_ij = dh_ijk", lambda ijk=ijk: d(data.h[ijk]), value)
    for ijkl in cover.overlaps(4):
        name = f"deligne.cocycle[{_label(ijkl)}]"
        anchor = "h_jkl - h_ikl + h_ijl - h_ijk is constant" + (" and integral" if mode == "circle" else "")
        value, missing = _face(data.h, ijkl)
        if missing:
            r.record(name, anchor, False, "missing")
            continue
        _check_integral_constant(r, name, anchor, value, mode)
    return r


def _standard_bracket_1(a1: AtiyahSection, a2: AtiyahSection) -> AtiyahSection:
    return AtiyahSection(vf_bracket(a1.v, a2.v), a1.v.apply(a2.f) - a2.v.apply(a1.f))


def verify_transition_equivariance(cover: BoxCover, data, e1, e2, pair: tuple[int, int],
                                   shear: DifferentialForm | None = None) -> Report:
    """The shear transition on an overlap commutes with the local untwisted bracket.

    For 2-form data sections are GeneralizedSection and G(v + a) = v + a + i_v dA_ij;
    for 1-form data they are AtiyahSection and G(v + r) = v + r + dh_ij(v).  An
    explicit ``shear`` replaces dA_ij (resp. dh_ij).
    """
    pair = tuple(sorted(pair))
    r = Report(f"transition equivariance on overlap {_label(pair)}")
    if pair not in cover.overlaps(2):
        r.record(f"transition[{_label(pair)}].declared", "sections live on a nonempty overlap", False,
                 "no such overlap")
        return r
    if isinstance(data, LocalData2):
        S = shear if shear is not None else d(data.A[pair])
        G = lambda e: GeneralizedSection(e.v, e.alpha + iota(e.v, S))
        M0 = SplitCourantModel.standard(cover.chart)
        br = lambda a, b: twisted_courant(M0, a, b)
        r.check(f"transition[{_label(pair)}].bracket", "[G e1, G e2] = G[e1, e2]",
                lambda: br(G(e1), G(e2)), lambda: G(br(e1, e2)))
        r.check(f"transition[{_label(pair)}].pairing", "<G e1, G e2> = <e1, e2>",
                lambda: pairing_plus(G(e1), G(e2)), lambda: pairing_plus(e1, e2))
    else:
        S = shear if shear is not None else d(data.h[pair])
        G = lambda a: AtiyahSection(a.v, a.f + iota(a.v, S))
        r.check(f"transition[{_label(pair)}].bracket", "[G a1, G a2] = G[a1, a2]",
                lambda: _standard_bracket_1(G(e1), G(e2)), lambda: G(_standard_bracket_1(e1, e2)))
    return r
