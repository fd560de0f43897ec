"""Seeded random populations for the property suites.

Hamiltonian data is produced backwards: pick a random (n-1)-form beta, solve
iota_v omega = d beta for v, and then alpha = -beta + d f is Hamiltonian with
field v.  Structured members (constant and rotation fields, the cyclic triple
x dy, y dz, z dx) are mixed in so that non-commuting brackets always occur.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .algebra import Q
from .courant import GeneralizedSection
from .exterior import Chart, DifferentialForm, VectorField, d, iota
from .linalg import Unique, solve_linear
from .plectic import PlecticStructure, hamiltonian_form_of


@dataclass(frozen=True)
class GeneratorConfig:
    max_degree: int = 4
    max_terms: int = 3
    numerators: int = 3
    denominators: tuple[int, ...] = (1, 1, 2, 3)


def _coefficient(rng: random.Random, cfg: GeneratorConfig):
    while True:
        c = Q(rng.randint(-cfg.numerators, cfg.numerators)) / rng.choice(cfg.denominators)
        if c != 0:
            return c


def random_exponent(rng: random.Random, dim: int, max_degree: int) -> tuple[int, ...]:
    total = rng.randint(0, max(max_degree, 0))
    exp = [0] * dim
    for _ in range(total):
        exp[rng.randrange(dim)] += 1
    return tuple(exp)


def random_polynomial(rng: random.Random, chart: Chart, cfg: GeneratorConfig = GeneratorConfig(),
                      max_degree: int | None = None):
    deg = cfg.max_degree if max_degree is None else max_degree
    if deg < 0:
        return chart.poly()
    terms = {}
    for _ in range(rng.randint(1, cfg.max_terms)):
        exp = random_exponent(rng, chart.dimension, deg)
        terms[exp] = terms.get(exp, 0) + _coefficient(rng, cfg)
    return chart.poly(terms)


def random_function(rng, chart, cfg=GeneratorConfig(), max_degree=None) -> DifferentialForm:
    return DifferentialForm.function(chart, random_polynomial(rng, chart, cfg, max_degree))


def random_form(rng, chart: Chart, degree: int, cfg=GeneratorConfig(), max_degree=None,
                density: float = 0.6) -> DifferentialForm:
    coeffs = {}
    for idx in combinations(range(chart.dimension), degree):
        if rng.random() < density:
            coeffs[idx] = random_polynomial(rng, chart, cfg, max_degree)
    return DifferentialForm(chart, degree, coeffs)


def random_field(rng, chart: Chart, cfg=GeneratorConfig(), max_degree=None, density: float = 0.7) -> VectorField:
    comps = [random_polynomial(rng, chart, cfg, max_degree) if rng.random() < density else 0
             for _ in range(chart.dimension)]
    return VectorField(chart, comps)


def random_point(rng, dim: int, bound: int = 4) -> tuple:
    return tuple(Q(rng.randint(-bound, bound)) / rng.choice((1, 1, 2)) for _ in range(dim))


def random_section(rng, chart: Chart, cfg=GeneratorConfig(), max_degree=None) -> GeneralizedSection:
    deg = cfg.max_degree if max_degree is None else max_degree
    return GeneralizedSection(random_field(rng, chart, cfg, deg), random_form(rng, chart, 1, cfg, deg))


def constant_fields(chart: Chart) -> list[VectorField]:
    return [chart.partial(c) for c in chart.coordinates]


def rotation_fields(chart: Chart) -> list[VectorField]:
    """x_i @x_j - x_j @x_i for i < j."""
    out = []
    for a, b in combinations(chart.coordinates, 2):
        out.append(chart.partial(b) * chart.coord(a) - chart.partial(a) * chart.coord(b))
    return out


def _solve_field(P: PlecticStructure, target: DifferentialForm) -> VectorField | None:
    rhs = [target.coefficient(I) for I in P.row_indices]
    res = solve_linear(P.contraction_matrix, rhs)
    if not isinstance(res, Unique):
        return None
    return VectorField(P.chart, res.solution)


def random_hamiltonian_pair(rng, P: PlecticStructure, cfg=GeneratorConfig(), tries: int = 8):
    """(alpha, v) with d alpha = -iota_v omega and polynomial data of degree <= cfg.max_degree."""
    chart, k = P.chart, P.n - 1
    for _ in range(tries):
        beta = random_form(rng, chart, k, cfg, cfg.max_degree, density=0.8)
        db = d(beta)
        if db.is_zero():
            continue
        v = _solve_field(P, db)
        if v is None or not all(c.is_polynomial() for c in v.components):
            continue
        alpha = -beta
        if k >= 1 and rng.random() < 0.5:
            alpha = alpha + d(random_form(rng, chart, k - 1, cfg, cfg.max_degree))
        return alpha, v
    # constant fields are Hamiltonian for constant omega; take a primitive
    v = rng.choice(constant_fields(chart))
    return hamiltonian_form_of(P, v), v


def random_hamiltonian_form(rng, P: PlecticStructure, cfg=GeneratorConfig()) -> DifferentialForm:
    return random_hamiltonian_pair(rng, P, cfg)[0]


def structured_hamiltonian_forms(P: PlecticStructure) -> list[DifferentialForm]:
    """Primitives for constant and rotation fields, when those fields are Hamiltonian."""
    out = []
    for v in constant_fields(P.chart) + rotation_fields(P.chart):
        if d(iota(v, P.omega)).is_zero():
            out.append(hamiltonian_form_of(P, v))
    return out


def cyclic_triple(chart: Chart) -> tuple[DifferentialForm, DifferentialForm, DifferentialForm]:
    x, y, z = (chart.coord(c) for c in chart.coordinates[:3])
    dx, dy, dz = (chart.dx(c) for c in chart.coordinates[:3])
    return x * dy, y * dz, z * dx


def hamiltonian_population(rng, P: PlecticStructure, count: int, cfg=GeneratorConfig(), structured: bool = True):
    """Hamiltonian forms: structured members first, then random ones up to ``count``."""
    pop = structured_hamiltonian_forms(P) if structured else []
    if structured and P.n == 2 and P.chart.dimension == 3:
        pop += list(cyclic_triple(P.chart))
    pop = pop[:count]
    while len(pop) < count:
        pop.append(random_hamiltonian_form(rng, P, cfg))
    return pop


def hamiltonian_triples(rng, P: PlecticStructure, count: int, cfg=GeneratorConfig()):
    """Triples of Hamiltonian forms, each drawing from structured and random members."""
    structured = structured_hamiltonian_forms(P)
    out = []
    if P.n == 2 and P.chart.dimension == 3:
        out.append(cyclic_triple(P.chart))
    while len(out) < count:
        triple = []
        for _ in range(3):
            if structured and rng.random() < 0.3:
                triple.append(rng.choice(structured))
            else:
                triple.append(random_hamiltonian_form(rng, P, cfg))
        out.append(tuple(triple))
    return out
