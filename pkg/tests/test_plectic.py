import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from courantkit.errors import DegenerateStructure, NoPrimitive, NotClosed, NotHamiltonian
from courantkit.exterior import Chart, d, iota
from courantkit.generators import GeneratorConfig, random_hamiltonian_pair
from courantkit.plectic import (CertifiedEverywhere, DegenerateAt, GenericOnly, PlecticStructure,
                                check_nondegenerate, hamiltonian_form_of, hamiltonian_vf, is_hamiltonian,
                                jacobiator_J, lie2_of_plectic, semi_bracket, verify_calculus, verify_semibracket)

from conftest import R2, R3, functions

x, y, z = (R3.coord(c) for c in "xyz")
P3 = PlecticStructure(R3, R3.basis("x", "y", "z"))
P2 = PlecticStructure(R2, R2.basis(*R2.coordinates))
dx, dy, dz = (R3.dx(c) for c in "xyz")
px, py, pz = (R3.partial(c) for c in "xyz")
TRIPLE = (x * dy, y * dz, z * dx)


def test_nondegeneracy_verdicts():
    assert isinstance(check_nondegenerate(P3), CertifiedEverywhere)
    assert isinstance(check_nondegenerate(P2), CertifiedEverywhere)
    R4 = Chart.of("x", "y", "z", "w")
    v = check_nondegenerate(PlecticStructure(R4, R4.basis("x", "y", "z")))
    assert isinstance(v, DegenerateAt) and v.kernel == R4.partial("w")


def test_nonconstant_verdicts():
    vol = R3.basis("x", "y", "z")
    assert isinstance(check_nondegenerate(PlecticStructure(R3, x * vol)), DegenerateAt)
    assert isinstance(check_nondegenerate(PlecticStructure(R3, (x * x + 1) * vol)), GenericOnly)


def test_structure_must_be_closed():
    with pytest.raises(NotClosed):
        PlecticStructure(R3, x * (dy ^ dz) + z * (dx ^ dy) + y * (dx ^ dz) + x * (dx ^ dy))


def test_degenerate_structure_refuses_operations():
    R4 = Chart.of("x", "y", "z", "w")
    P = PlecticStructure(R4, R4.basis("x", "y", "z"))
    with pytest.raises(DegenerateStructure):
        hamiltonian_vf(P, R4.coord("x") * R4.dx("y"))


def test_hamiltonian_examples():
    assert hamiltonian_vf(P3, x * dy) == -pz
    assert hamiltonian_vf(P3, y * dz) == -px
    assert hamiltonian_vf(P3, d(x * y * z)).is_zero()


def test_not_hamiltonian_carries_residual():
    R5 = Chart.of("x1", "x2", "x3", "x4", "x5")
    P = PlecticStructure(R5, R5.basis("x1", "x2", "x3") + R5.basis("x1", "x4", "x5"))
    with pytest.raises(NotHamiltonian) as err:
        hamiltonian_vf(P, R5.coord("x2") * R5.dx("x4"))
    assert not err.value.residual.is_zero()
    assert not is_hamiltonian(P, R5.coord("x2") * R5.dx("x4"))


def test_primitive_examples():
    a = hamiltonian_form_of(P3, py)
    assert d(a) == dx ^ dz
    assert hamiltonian_form_of(P3, R3.zero_field()).is_zero()
    with pytest.raises(NoPrimitive):
        hamiltonian_form_of(P3, px * x)


def test_bracket_and_jacobiator_examples():
    a, b, c = TRIPLE
    assert semi_bracket(P3, a, b) == dy
    assert semi_bracket(P3, a, a).is_zero()
    assert semi_bracket(P3, d(x * y), b).is_zero()
    assert jacobiator_J(P3, a, b, c) == R3.const(1)
    assert jacobiator_J(P3, a, a, b).is_zero()
    assert jacobiator_J(P3, d(z), b, c).is_zero()


def test_reports_on_the_cyclic_triple():
    assert verify_semibracket(P3, *TRIPLE).ok
    assert verify_calculus(P3, *TRIPLE).ok
    assert verify_semibracket(P3, x * dy, y * dz, R3.zero_form(1)).ok
    assert verify_semibracket(P3, dx.scale(2), dy, dz).ok


def test_lie2_of_plectic_degree_one():
    L = lie2_of_plectic(P3)
    f, g = L.element1(x), L.element1(y)
    assert L.bracket(f, g).is_zero()
    assert L.d(f).payload == dx
    assert L.J(*(L.element0(a) for a in TRIPLE)).payload == R3.const(1)


@given(st.integers(0, 10 ** 6))
def test_random_hamiltonian_pairs(seed):
    a, v = random_hamiltonian_pair(random.Random(seed), P3, GeneratorConfig(max_degree=3))
    assert d(a) == -iota(v, P3.omega)
    assert hamiltonian_vf(P3, a) == v


@given(st.integers(0, 10 ** 6), functions())
def test_exact_perturbation_keeps_the_field(seed, f):
    a, v = random_hamiltonian_pair(random.Random(seed), P3, GeneratorConfig(max_degree=3))
    assert hamiltonian_vf(P3, a + d(f)) == v
