import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from courantkit.algebra import Q
from courantkit.errors import NotClosed, NotHamiltonian
from courantkit.exterior import d
from courantkit.extension import (CECochain, Jx, PathSegment, bu1_witness, ce_delta, ce_delta_cochain,
                                  centrality_check, ev_morphism, lie2_of_xham, line_integral, path_cochain,
                                  verify_coboundary_relation)
from courantkit.generators import GeneratorConfig, random_hamiltonian_pair, random_point, rotation_fields
from courantkit.lie2 import check_L2A_axioms, check_morphism
from courantkit.plectic import PlecticStructure, hamiltonian_vf, lie2_of_plectic

from conftest import R3

x, y, z = (R3.coord(c) for c in "xyz")
dx, dy, dz = (R3.dx(c) for c in "xyz")
px, py, pz = (R3.partial(c) for c in "xyz")
P3 = PlecticStructure(R3, R3.basis("x", "y", "z"))
O = (0, 0, 0)
ROT = rotation_fields(R3)


def test_jacobiator_cocycle_values():
    fields = [hamiltonian_vf(P3, a) for a in (x * dy, y * dz, z * dx)]
    assert Jx(P3, O)(*fields) == 1
    assert Jx(P3, (5, -2, 7))(*fields) == 1
    assert Jx(P3, O)(px, py, pz) == -1
    assert all(v == 0 for v in Jx(P3, (1, 2, 3)).antisymmetry_defects(ROT))


def test_delta_expansion_on_rotations():
    # on so(3) the brackets of rotations are rotations, so the sum is nontrivial
    J = Jx(P3, (1, 2, 3))
    assert ce_delta(J, ROT + [ROT[0]]) == 0
    assert ce_delta_cochain(J)(ROT[0], ROT[1], ROT[2], px) == 0


def test_delta_of_a_two_cochain():
    c = CECochain(2, lambda v, w: Q(1), name="one")
    # delta c(a, b, c) = -c([a,b],c) + c([a,c],b) - c([b,c],a) = -1 + 1 - 1
    assert ce_delta(c, ROT) == -1
    with pytest.raises(ValueError):
        ce_delta(c, ROT[:2])


def test_delta_refuses_non_hamiltonian_fields():
    with pytest.raises(NotHamiltonian):
        ce_delta(Jx(P3, O), [px * x, py, pz, px])


def test_line_integrals():
    seg = PathSegment(O, (1, 1, 1))
    assert line_integral(x * dy, seg) == Q("1/2")
    assert line_integral(d(x * y * z), seg) == 1
    assert path_cochain(P3, PathSegment(O, (0, 0, 1)))(px, py) == 1


def test_coboundary_relation_examples():
    assert verify_coboundary_relation(P3, O, (1, 2, 3), *ROT).ok
    assert verify_coboundary_relation(P3, O, (1, 0, 0), px, py, pz).ok


def test_evaluation_morphism():
    mor, L = ev_morphism(P3, O), lie2_of_xham(P3, O)
    assert mor.phi1(x + R3.const(3)) == 3
    assert check_morphism(mor, lie2_of_plectic(P3), L, x * dy, y * dz, z * dx).ok
    assert check_L2A_axioms(L, *ROT, px).ok


def test_closed_forms_are_central_and_exact():
    assert centrality_check(P3, d(x * y), x * dy).ok
    rep = bu1_witness(P3, y * dx + x * dy)
    assert rep.ok and rep.witnesses["potential"] == x * y
    with pytest.raises(NotClosed):
        bu1_witness(P3, x * dy)


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_random_coboundary(seed):
    rng = random.Random(seed)
    vs = [random_hamiltonian_pair(rng, P3, GeneratorConfig(max_degree=3))[1] for _ in range(4)]
    a, b = random_point(rng, 3), random_point(rng, 3)
    assert verify_coboundary_relation(P3, a, b, *vs[:3]).ok
    assert ce_delta(Jx(P3, a), vs) == 0
