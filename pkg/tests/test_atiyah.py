import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from courantkit.atiyah import (AtiyahSection, atiyah_bracket, atiyah_preserves, ks_cocycle, ks_delta_check, phi,
                               poisson, sympl_hamiltonian_vf, symplectic, verify_poisson_iso)
from courantkit.errors import DegreeMismatch
from courantkit.exterior import Chart
from courantkit.generators import GeneratorConfig, random_function, random_point
from courantkit.plectic import PlecticStructure

C = Chart.of("q", "p")
q, p = C.coord("q"), C.coord("p")
Pq, Pp = C.partial("q"), C.partial("p")
W = C.basis("q", "p")
L = AtiyahSection.lift


def test_hamiltonian_fields():
    assert sympl_hamiltonian_vf(W, q) == Pp
    assert sympl_hamiltonian_vf(W, p) == -Pq


def test_poisson_examples():
    assert poisson(W, q, p) == C.const(1)
    assert poisson(W, q * q, p) == q.scale(2)
    assert poisson(W, p, q) == C.const(-1)


def test_bracket_of_lifts():
    assert atiyah_bracket(W, L(Pq), L(Pp)) == AtiyahSection(C.zero_field(), C.const(-1))
    assert atiyah_bracket(W, L(Pp), L(Pq)) == AtiyahSection(C.zero_field(), C.const(1))


def test_preservation():
    assert atiyah_preserves(W, phi(W, q))
    verdict = atiyah_preserves(W, AtiyahSection(C.zero_field(), p))
    assert not verdict and verdict.certificate == C.dx("p")


def test_cocycle():
    c = ks_cocycle(W, (0, 0))
    assert c(Pq, Pp) == -1
    assert ks_delta_check(W, (1, 2), Pq, Pp, sympl_hamiltonian_vf(W, q * p)).ok


def test_symplectic_needs_a_two_form():
    R3 = Chart.of("x", "y", "z")
    with pytest.raises(DegreeMismatch):
        symplectic(R3.basis("x", "y", "z"))


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_random_poisson_iso(seed):
    rng = random.Random(seed)
    g = GeneratorConfig(max_degree=3)
    f, h = random_function(rng, C, g), random_function(rng, C, g)
    assert verify_poisson_iso(W, f, h).ok
    assert verify_poisson_iso(PlecticStructure(C, W), f, h).ok
    vs = [sympl_hamiltonian_vf(W, random_function(rng, C, g)) for _ in range(3)]
    assert ks_delta_check(W, random_point(rng, 2), *vs).ok
