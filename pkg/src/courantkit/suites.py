"""Seeded randomized property suites over the standard desk-scale charts.

Each suite runs many instances and folds the per-instance reports into one
report with a single line per identity: PASS when every instance passed,
otherwise FAIL with the first failing residual and its sample index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Callable, Iterable

from .algebra import Q
from .atiyah import ks_delta_check, phi, sympl_hamiltonian_vf, verify_poisson_iso
from .cocycle import Box, BoxCover, LocalData2, verify_transition_equivariance, verify_triv_3form
from .courant import (GeneralizedSection, SplitCourantModel, SplittingShift, change_splitting, curvature,
                      lie2_of_courant, lie2_of_preserving, preserves_against, preserves_splitting,
                      shifted_curvature, shifted_twist, twisted_courant, verify_courant_axioms)
from .exterior import Chart, d, form_eval, iota, lie_derivative, vf_bracket, wedge
from .extension import (Jx, bu1_witness, ce_delta, ev_morphism, lie2_of_xham, verify_coboundary_relation)
from .generators import (GeneratorConfig, hamiltonian_triples, random_field, random_form, random_function,
                         random_hamiltonian_pair, random_point, random_section, rotation_fields)
from .lie2 import abelian_closed, check_L2A_axioms, check_morphism, trivial_xham
from .morphisms import embed, iso_roundtrip, main_pair
from .plectic import PlecticStructure, hamiltonian_form_of, hamiltonian_vf, is_hamiltonian, lie2_of_plectic, verify_calculus, verify_semibracket
from .report import Report


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    count: int = 200
    max_degree: int = 4

    @property
    def generator(self) -> GeneratorConfig:
        return GeneratorConfig(max_degree=self.max_degree)

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{name}:{self.seed}")


def standard_r3():
    C = Chart.of("x", "y", "z")
    return C, PlecticStructure(C, C.basis("x", "y", "z"))


def standard_r2():
    C = Chart.of("q", "p")
    return C, PlecticStructure(C, C.basis("q", "p"))


def tally(title: str, reports: Iterable[Report]) -> Report:
    """Fold instance reports: one line per check name, in first-seen order."""
    order, counts, first_fail = [], {}, {}
    anchors = {}
    for i, rep in enumerate(reports):
        for c in rep.checks:
            if c.name not in counts:
                order.append(c.name)
                counts[c.name] = [0, 0]
                anchors[c.name] = c.anchor
            counts[c.name][0] += 1
            if c.passed:
                counts[c.name][1] += 1
            elif c.name not in first_fail:
                first_fail[c.name] = f"sample {i}: {c.residual}"
    out = Report(title)
    for name in order:
        total, ok = counts[name]
        anchor = f"{anchors[name]} [{ok}/{total}]"
        out.record(name, anchor, ok == total, first_fail.get(name, "0"))
    return out


def _instances(count: int, make: Callable[[int], Report]) -> Iterable[Report]:
    for i in range(count):
        yield make(i)


def _iota(v, a):
    return None if a.degree == 0 else iota(v, a)


def _wedge(a, b, sign=1):
    if a is None or b is None:
        return None
    return wedge(a, b).scale(sign)


def _sum(degree, chart, *terms):
    acc = chart.zero_form(max(degree, 0))
    for t in terms:
        if t is not None:
            acc = acc + t
    return acc


def _d_iota(v, a):
    return d(iota(v, a)) if a.degree else a.chart.zero_form(0)


# --- the suites ---------------------------------------------------------------

def suite_exterior(cfg: SuiteConfig = SuiteConfig()) -> Report:
    C, _ = standard_r3()
    rng, g = cfg.rng("exterior"), cfg.generator

    def one(i):
        k = i % 4
        a = random_form(rng, C, k, g)
        b = random_form(rng, C, (i // 4) % 3, g)
        v, w = random_field(rng, C, g, 2), random_field(rng, C, g, 2)
        r = Report()
        r.check("exterior.d-squared", "d d a = 0", lambda: d(d(a)))
        # i_v kills functions, so the terms involving i_v of a 0-form drop out
        r.check("exterior.cartan", "L_v a = d i_v a + i_v d a",
                lambda: lie_derivative(v, a), lambda: _d_iota(v, a) + iota(v, d(a)))
        r.check("exterior.interior-derivation", "i_v(a ^ b) = i_v a ^ b + (-1)^k a ^ i_v b",
                lambda: _sum(wedge(a, b).degree - 1, C, _iota(v, wedge(a, b))),
                lambda: _sum(wedge(a, b).degree - 1, C,
                             _wedge(_iota(v, a), b), _wedge(a, _iota(v, b), -1 if k % 2 else 1)))
        r.check("exterior.bracket-interior", "i_[v,w] = L_v i_w - i_w L_v",
                lambda: iota(vf_bracket(v, w), a),
                lambda: lie_derivative(v, iota(w, a)) - iota(w, lie_derivative(v, a)))
        return r

    return tally("exterior calculus", _instances(cfg.count, one))


def _triples(name: str, cfg: SuiteConfig):
    _, P = standard_r3()
    return P, hamiltonian_triples(cfg.rng(name), P, cfg.count, cfg.generator)


def suite_semibracket(cfg: SuiteConfig = SuiteConfig()) -> Report:
    P, triples = _triples("semibracket", cfg)
    return tally("semi-bracket on Hamiltonian forms", (verify_semibracket(P, *t) for t in triples))


def suite_calculus(cfg: SuiteConfig = SuiteConfig()) -> Report:
    P, triples = _triples("calculus", cfg)
    return tally("calculus identities", (verify_calculus(P, *t) for t in triples))


def suite_courant(cfg: SuiteConfig = SuiteConfig()) -> Report:
    C, P = standard_r3()
    rng, g = cfg.rng("courant"), cfg.generator
    out = Report("Courant axioms")
    for label, twist in (("vol", P.omega), ("zero", C.zero_form(3))):
        model = SplitCourantModel(C, twist)

        def one(i, model=model):
            es = [random_section(rng, C, g, 2) for _ in range(3)]
            f, h = random_function(rng, C, g, 3), random_function(rng, C, g, 3)
            return verify_courant_axioms(model, *es, f, h)

        out.extend(tally("", _instances(cfg.count, one)), prefix=f"twist-{label}.")
    return out


def suite_curvature(cfg: SuiteConfig = SuiteConfig()) -> Report:
    C, P = standard_r3()
    rng, g = cfg.rng("curvature"), cfg.generator
    model = SplitCourantModel(C, P.omega)

    def one(i):
        vs = [random_field(rng, C, g, 2) for _ in range(3)]
        B = random_form(rng, C, 2, g, 2)
        shift = SplittingShift(B)
        shifted = SplitCourantModel(C, shifted_twist(model, shift))
        e1, e2 = random_section(rng, C, g, 2), random_section(rng, C, g, 2)
        r = Report()
        r.check("curvature.canonical", "<[s v1, s v2], s v3> = -omega(v1, v2, v3)",
                lambda: curvature(model, *vs), lambda: -form_eval(model.twist, vs))
        r.check("curvature.shifted", "after s -> s + B the curvature is -omega + dB",
                lambda: shifted_curvature(model, shift, *vs), lambda: -form_eval(shifted.twist, vs))
        r.check("curvature.frame-equivariance", "the shift carries the bracket to the bracket twisted by omega - dB",
                lambda: change_splitting(shift, twisted_courant(model, e1, e2)),
                lambda: twisted_courant(shifted, change_splitting(shift, e1), change_splitting(shift, e2)))
        return r

    return tally("curvature of the canonical splitting", _instances(cfg.count, one))


def _closed_form(rng, C, g):
    return d(random_function(rng, C, g)) + random_form(rng, C, 1, g, 0)


def suite_lie2(cfg: SuiteConfig = SuiteConfig()) -> Report:
    """The six Lie 2-algebras on structured and random quadruples."""
    C, P = standard_r3()
    rng, g = cfg.rng("lie2"), cfg.generator
    model = SplitCourantModel(C, P.omega)
    point = (Q(1), Q(-1), Q("1/2"))
    rotations = rotation_fields(C)
    algebras = {
        "hamiltonian-forms": lie2_of_plectic(P),
        "courant-sections": lie2_of_courant(model),
        "preserving-sections": lie2_of_preserving(model),
        "hamiltonian-fields": trivial_xham(C),
        "closed-forms": abelian_closed(C),
        "hamiltonian-fields-at-point": lie2_of_xham(P, point),
    }

    def ham(i):
        a, _ = random_hamiltonian_pair(rng, P, g)
        return a

    def field(i):
        return rotations[i % 3] if i % 2 == 0 else hamiltonian_vf(P, ham(i))

    makers = {
        "hamiltonian-forms": (lambda i: [ham(i) for _ in range(4)],
                              lambda i: (random_function(rng, C, g), random_function(rng, C, g))),
        "courant-sections": (lambda i: [random_section(rng, C, g, 2) for _ in range(4)],
                             lambda i: (random_function(rng, C, g, 3), random_function(rng, C, g, 3))),
        "preserving-sections": (lambda i: [embed(P, ham(i)) for _ in range(4)],
                                lambda i: (random_function(rng, C, g), random_function(rng, C, g))),
        "hamiltonian-fields": (lambda i: [field(i + k) for k in range(4)], lambda i: (Q(0), Q(0))),
        "closed-forms": (lambda i: [_closed_form(rng, C, g) for _ in range(4)],
                         lambda i: (random_function(rng, C, g), random_function(rng, C, g))),
        "hamiltonian-fields-at-point": (lambda i: [field(i + k) for k in range(4)],
                                        lambda i: (Q(rng.randint(-3, 3)), Q(rng.randint(-3, 3)))),
    }
    out = Report("Lie 2-algebra axioms")
    count = max(1, -(-cfg.count // len(algebras)))
    for name, L in algebras.items():
        elems, ones = makers[name]

        def one(i, L=L, elems=elems, ones=ones):
            x, y, z, w = elems(i)
            f, h = ones(i)
            if i % 2:
                return check_L2A_axioms(L, x, y, z, w)  # default degree-1 entries: Jacobiators
            return check_L2A_axioms(L, x, y, z, w, f, h)

        out.extend(tally("", _instances(count, one)), prefix=f"{name}.")
    return out


def suite_morphism(cfg: SuiteConfig = SuiteConfig()) -> Report:
    C, P = standard_r3()
    rng = cfg.rng("morphism")
    model = SplitCourantModel(C, P.omega)
    mor, src, tgt = main_pair(P, model)
    _, triples = _triples("morphism", cfg)
    out = Report("morphisms of Lie 2-algebras")

    def one(i):
        a, b, c = triples[i]
        return check_morphism(mor, src, tgt, a, b, c, random_function(rng, C, cfg.generator))

    out.extend(tally("", _instances(len(triples), one)), prefix="main.")
    point = random_point(rng, 3)
    ev, target = ev_morphism(P, point), lie2_of_xham(P, point)

    def one_ev(i):
        a, b, c = triples[i]
        return check_morphism(ev, src, target, a, b, c, random_function(rng, C, cfg.generator))

    out.extend(tally("", _instances(max(1, len(triples) // 4), one_ev)), prefix="evaluation.")
    return out


def in_image(P: PlecticStructure, e: GeneralizedSection) -> bool:
    """e = phi0(alpha) for some Hamiltonian alpha, i.e. alpha Hamiltonian with field v."""
    return is_hamiltonian(P, e.alpha) and hamiltonian_vf(P, e.alpha) == e.v


def suite_iso(cfg: SuiteConfig = SuiteConfig()) -> Report:
    """Preserving sections are exactly the image of the embedding, tested both ways."""
    C, P = standard_r3()
    rng, g = cfg.rng("iso"), cfg.generator
    model = SplitCourantModel(C, P.omega)
    probes = [C.partial(c) for c in C.coordinates]

    def criterion(e):
        return all(preserves_against(model, e, v).is_zero() for v in probes)

    def one_image(i):
        alpha, _ = random_hamiltonian_pair(rng, P, g)
        e = embed(P, alpha)
        r = iso_roundtrip(P, model, alpha)
        r.extend(iso_roundtrip(P, model, e))
        r.record("iso.criterion-on-image", "probes see no defect on phi0(alpha)", criterion(e),
                 "defect on a coordinate probe")
        return r

    def one_random(i):
        if i % 2:
            alpha, v = random_hamiltonian_pair(rng, P, g)
            e = GeneralizedSection(v + random_field(rng, C, g, 1), alpha)
        else:
            e = random_section(rng, C, g, 2)
        r = Report()
        verdict = bool(preserves_splitting(model, e))
        member = in_image(P, e)
        r.record("iso.criterion-matches-image", "i_v'(d alpha + i_v omega) = 0 for all v' iff e in image",
                 verdict == member == criterion(e), f"preserves={verdict} image={member}")
        return r

    out = Report("preserving sections vs the image of phi0")
    out.extend(tally("", _instances(max(cfg.count // 2, 100), one_image)))
    out.extend(tally("", _instances(max(cfg.count // 2, 100), one_random)))
    return out


def suite_atiyah(cfg: SuiteConfig = SuiteConfig()) -> Report:
    C, P = standard_r2()
    rng, g = cfg.rng("atiyah"), cfg.generator

    def one(i):
        f, h = random_function(rng, C, g), random_function(rng, C, g)
        r = verify_poisson_iso(P, f, h)
        vs = [sympl_hamiltonian_vf(P, random_function(rng, C, g)) for _ in range(3)]
        r.extend(ks_delta_check(P, random_point(rng, 2), *vs))
        return r

    return tally("Poisson algebra and the Atiyah algebroid", _instances(cfg.count, one))


def suite_extension(cfg: SuiteConfig = SuiteConfig()) -> Report:
    C, P = standard_r3()
    rng, g = cfg.rng("extension"), cfg.generator
    rotations = rotation_fields(C)

    def ham_pair(i):
        if i % 3 == 0:
            v = rotations[rng.randrange(3)]
            return hamiltonian_form_of(P, v), v
        return random_hamiltonian_pair(rng, P, g)

    def one(i):
        r = Report()
        pairs = [ham_pair(i + k) for k in range(4)]
        alphas, vs = [a for a, _ in pairs], [v for _, v in pairs]
        x, y = random_point(rng, 3), random_point(rng, 3)
        r.check("extension.delta-J", "delta J_x = 0", lambda: ce_delta(Jx(P, x), vs))
        r.extend(verify_coboundary_relation(P, x, y, *vs[:3]))
        r.extend(check_morphism(ev_morphism(P, x), lie2_of_plectic(P), lie2_of_xham(P, x), *alphas[:3]),
                 prefix="evaluation.")
        alpha = _closed_form(rng, C, g)
        r.extend(bu1_witness(P, alpha))
        r.record("bu1.witness", "a potential is returned for each closed 1-form",
                 "potential" in r.witnesses, "no potential")
        return r

    out = tally("central extensions by the Jacobiator", _instances(max(cfg.count, 50), one))
    # the structured rotation quadruple, whose brackets do not commute
    rot = Report()
    rot.check("extension.delta-J-rotations", "delta J_x = 0 on so(3) rotations",
              lambda: ce_delta(Jx(P, (1, 2, 3)), rotations + [rotations[0]]))
    out.extend(rot)
    return out


# --- cocycle fixtures -----------------------------------------------------------

def two_box_fixture():
    """A valid two-box Deligne datum for dx^dy^dz: (cover, omega, data)."""
    C = Chart.of("x", "y", "z")
    x = C.coord("x")
    cover = BoxCover(C, {1: Box((0, 0, 0), (2, 2, 2)), 2: Box((1, 1, 1), (3, 3, 3))})
    B1 = x * C.basis("y", "z")
    A = x * C.dx("y")
    data = LocalData2({1: B1, 2: B1 + d(A)}, {(1, 2): A})
    return cover, C.basis("x", "y", "z"), data


def three_box_fixture():
    """Three boxes with a common triple overlap and h_123 = x y z."""
    C = Chart.of("x", "y", "z")
    x, y, z = (C.coord(c) for c in "xyz")
    cover = BoxCover(C, {1: Box((0, 0, 0), (2, 2, 2)), 2: Box((1, 1, 1), (3, 3, 3)),
                         3: Box(("3/2", "3/2", "3/2"), (4, 4, 4))})
    B = x * C.basis("y", "z")
    A12, A13 = x * C.dx("y"), y * C.dx("z")
    h = x * y * z
    A23 = A13 - A12 + d(h)
    data = LocalData2({1: B, 2: B + d(A12), 3: B + d(A13)}, {(1, 2): A12, (1, 3): A13, (2, 3): A23},
                      {(1, 2, 3): h})
    return cover, C.basis("x", "y", "z"), data


def _with(data: LocalData2, **changes) -> LocalData2:
    B, A, h = dict(data.B), dict(data.A), dict(data.h)
    for key, (table, delta) in changes.items():
        target = {"B": B, "A": A, "h": h}[table]
        label = int(key[1:]) if table == "B" else tuple(int(c) for c in key[1:])
        target[label] = target[label] + delta
    return LocalData2(B, A, h)


def perturbations():
    """(label, cover, omega, data, check ids expected to fail) for single-term perturbations."""
    cover, omega, data = two_box_fixture()
    C = cover.chart
    x, y, z = (C.coord(c) for c in "xyz")
    out = [
        ("A12 + y dz", cover, omega, _with(data, a12=("A", y * C.dx("z"))), ("deligne.connection[1,2]",)),
        ("B2 + dx^dy", cover, omega, _with(data, b2=("B", C.basis("x", "y"))), ("deligne.connection[1,2]",)),
        ("B1 + z dx^dy", cover, omega, _with(data, b1=("B", z * C.basis("x", "y"))),
         ("deligne.curving[1]", "deligne.connection[1,2]", "deligne.splitting[1,2]")),
    ]
    cover3, omega3, data3 = three_box_fixture()
    out.append(("h123 + x", cover3, omega3, _with(data3, h123=("h", x)), ("deligne.transition[1,2,3]",)))
    out.append(("A23 + dz", cover3, omega3, _with(data3, a23=("A", C.dx("z"))), ("deligne.transition[1,2,3]",)))
    return out


def suite_cocycle(cfg: SuiteConfig = SuiteConfig()) -> Report:
    cover, omega, data = two_box_fixture()
    C = cover.chart
    rng, g = cfg.rng("cocycle"), cfg.generator
    out = Report("Deligne data on box covers")
    out.extend(verify_triv_3form(cover, omega, data), prefix="valid.")
    out.extend(verify_triv_3form(*three_box_fixture()), prefix="valid3.")
    for label, cov, om, bad, expected in perturbations():
        rep = verify_triv_3form(cov, om, bad)
        failed = tuple(c.name for c in rep.failures)
        name = f"perturbed[{label}]"
        out.record(name, f"fails exactly {', '.join(expected)}", failed == expected,
                   f"failed: {', '.join(failed) or 'nothing'}")
        nonzero = all(rep[n].residual not in ("", "0") for n in failed)
        out.record(name + ".certificate", "each failure carries a nonzero residual", nonzero, "empty residual")

    def one(i):
        e1, e2 = random_section(rng, C, g, 2), random_section(rng, C, g, 2)
        return verify_transition_equivariance(cover, data, e1, e2, (1, 2))

    out.extend(tally("", _instances(max(cfg.count // 10, 10), one)), prefix="random.")
    return out


SUITES: dict[str, Callable[[SuiteConfig], Report]] = {
    "exterior": suite_exterior,
    "semibracket": suite_semibracket,
    "calculus": suite_calculus,
    "courant": suite_courant,
    "curvature": suite_curvature,
    "lie2": suite_lie2,
    "morphism": suite_morphism,
    "iso": suite_iso,
    "atiyah": suite_atiyah,
    "extension": suite_extension,
    "cocycle": suite_cocycle,
}


def run_suite(name: str, cfg: SuiteConfig = SuiteConfig()) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](cfg)


def with_count(cfg: SuiteConfig, count: int) -> SuiteConfig:
    return replace(cfg, count=count)
