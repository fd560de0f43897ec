import random

from hypothesis import given
from hypothesis import strategies as st

from courantkit.exterior import d, iota
from courantkit.generators import (GeneratorConfig, cyclic_triple, hamiltonian_population, hamiltonian_triples,
                                   random_form, random_polynomial, random_section, rotation_fields,
                                   structured_hamiltonian_forms)
from courantkit.plectic import PlecticStructure, is_hamiltonian

from conftest import R3

P3 = PlecticStructure(R3, R3.basis("x", "y", "z"))
SEEDS = st.integers(0, 10 ** 6)


@given(SEEDS, st.integers(0, 4))
def test_degree_bounds(seed, deg):
    rng = random.Random(seed)
    cfg = GeneratorConfig(max_degree=deg)
    assert random_polynomial(rng, R3, cfg).total_degree() <= deg
    a = random_form(rng, R3, 2, cfg)
    assert a.degree == 2 and all(c.num.total_degree() <= deg for c in a.coeffs.values())


def test_seeded_reproducibility():
    a = [random_section(random.Random(7), R3) for _ in range(2)]
    assert a[0] == a[1]


def test_rotation_fields_are_hamiltonian():
    for v in rotation_fields(R3):
        assert d(iota(v, P3.omega)).is_zero()
    assert len(structured_hamiltonian_forms(P3)) == 6


def test_populations():
    rng = random.Random(0)
    pop = hamiltonian_population(rng, P3, 20)
    assert len(pop) == 20 and all(is_hamiltonian(P3, a) for a in pop)
    triples = hamiltonian_triples(rng, P3, 5)
    assert triples[0] == cyclic_triple(R3) and len(triples) == 5
