import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from courantkit.algebra import Q
from courantkit.courant import GeneralizedSection, SplitCourantModel, lie2_of_courant, lie2_of_preserving
from courantkit.errors import DegreeMismatch, NotClosed, NotPreserving, TwistMismatch
from courantkit.exterior import d
from courantkit.generators import GeneratorConfig, random_hamiltonian_pair, rotation_fields
from courantkit.lie2 import (Lie2Element, abelian_closed, check_L2A_axioms, check_morphism, identity_morphism,
                             trivial_xham)
from courantkit.morphisms import embed, is_injective_on, iso_roundtrip, main_morphism, main_pair
from courantkit.plectic import PlecticStructure, lie2_of_plectic

from conftest import R3

x, y, z = (R3.coord(c) for c in "xyz")
dx, dy, dz = (R3.dx(c) for c in "xyz")
px, py, pz = (R3.partial(c) for c in "xyz")
P3 = PlecticStructure(R3, R3.basis("x", "y", "z"))
M = SplitCourantModel(R3, P3.omega)
TRIPLE = (x * dy, y * dz, z * dx)
G = GeneratorConfig(max_degree=3)


def test_elements_carry_degrees():
    with pytest.raises(DegreeMismatch):
        Lie2Element(3, 0)
    L = lie2_of_plectic(P3)
    with pytest.raises(DegreeMismatch):
        L.d(L.element0(x * dy))
    with pytest.raises(DegreeMismatch):
        Lie2Element(0, dx) - Lie2Element(1, x)


def test_cyclic_triple_satisfies_every_axiom():
    for L in (lie2_of_plectic(P3),):
        assert check_L2A_axioms(L, *TRIPLE, dz).ok
    sections = [embed(P3, a) for a in TRIPLE + (dz,)]
    assert check_L2A_axioms(lie2_of_courant(M), *sections).ok
    assert check_L2A_axioms(lie2_of_preserving(M), *sections).ok


def test_field_algebras():
    rot = rotation_fields(R3)
    assert check_L2A_axioms(trivial_xham(R3), *rot, px).ok
    assert check_L2A_axioms(abelian_closed(R3), dx, d(x * y), dz, d(z * z), x, y).ok
    with pytest.raises(NotClosed):
        abelian_closed(R3).element0(x * dy)


def test_identity_morphisms():
    for L, elems in ((lie2_of_plectic(P3), TRIPLE), (lie2_of_courant(M), [embed(P3, a) for a in TRIPLE])):
        assert check_morphism(identity_morphism(L), L, L, *elems).ok


def test_main_morphism_values():
    mor = main_morphism(P3, M)
    assert mor.phi0(x * dy) == GeneralizedSection(-pz, x * dy)
    assert mor.Phi(x * dy, y * dz) == y.scale(Q("1/2"))
    assert mor.Phi(x * dy, x * dy).is_zero()


def test_main_morphism_on_the_cyclic_triple():
    mor, src, tgt = main_pair(P3, M)
    rep = check_morphism(mor, src, tgt, *TRIPLE)
    assert rep.ok
    assert check_morphism(mor, src, tgt, *TRIPLE, x * y).ok


def test_morphism_requires_matching_twist():
    with pytest.raises(TwistMismatch):
        main_morphism(P3, SplitCourantModel.standard(R3))


def test_iso_roundtrip():
    assert iso_roundtrip(P3, M, x * dy).ok
    assert iso_roundtrip(P3, M, GeneralizedSection(-pz, x * dy)).ok
    with pytest.raises(NotPreserving) as err:
        iso_roundtrip(P3, M, GeneralizedSection.cotangent(x * dy))
    assert err.value.certificate == dx ^ dy
    assert is_injective_on(P3, TRIPLE + (dz,))


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_random_hamiltonian_quadruples(seed):
    rng = random.Random(seed)
    forms = [random_hamiltonian_pair(rng, P3, G)[0] for _ in range(4)]
    assert check_L2A_axioms(lie2_of_plectic(P3), *forms).ok
    assert check_L2A_axioms(lie2_of_courant(M), *(embed(P3, a) for a in forms)).ok
    mor, src, tgt = main_pair(P3, M)
    assert check_morphism(mor, src, tgt, *forms[:3]).ok
