import pytest
from hypothesis import given
from hypothesis import strategies as st

from courantkit.errors import DegreeMismatch, NotClosed, RationalCoefficientUnsupported
from courantkit.exterior import (DifferentialForm, VectorField, contract, d, form_eval, homotopy_operator,
                                 iota, lie_derivative, poincare_potential, vf_bracket, wedge)

from conftest import R3, any_form, fields, forms, functions

x, y, z = (R3.coord(c) for c in "xyz")
dx, dy, dz = (R3.dx(c) for c in "xyz")
px, py, pz = (R3.partial(c) for c in "xyz")
VOL = dx ^ dy ^ dz


def test_wedge_examples():
    assert wedge(dx, dy) == R3.basis("x", "y")
    assert wedge(dx, dx).is_zero() and wedge(dx, dx).degree == 2
    assert wedge(x * dy, y * dz) == (x * y) * R3.basis("y", "z")


def test_d_examples():
    assert d(x * dy) == R3.basis("x", "y")
    assert d(VOL).is_zero()
    assert d(x * (dy ^ dz) + y * (dz ^ dx)) == VOL.scale(2)


def test_interior_examples():
    assert iota(pz, VOL) == R3.basis("x", "y")
    assert iota(py, VOL) == -R3.basis("x", "z")
    assert iota(px, x * y).is_zero()


def test_lie_derivative_examples():
    assert lie_derivative(px, x * dy) == dy
    assert lie_derivative(px, R3.zero_form(1)).is_zero()
    assert lie_derivative(pz, dx ^ dy).is_zero()


def test_bracket_examples():
    assert vf_bracket(px, py).is_zero()
    assert vf_bracket(py * x, px) == -py
    u = py * x - px * y
    v = pz * y - py * z
    assert vf_bracket(u, v) == pz * x - px * z


def test_evaluation_examples():
    assert form_eval(VOL, [px, py, pz]) == 1
    assert contract(VOL, [py, pz]) == dx
    assert form_eval(VOL, [px, px, pz]) == 0


def test_potential_examples():
    assert poincare_potential(y * dx + x * dy) == x * y
    assert poincare_potential(dx) == x
    with pytest.raises(NotClosed):
        poincare_potential(x * dy)


def test_potential_refuses_rational_coefficients():
    a = d(DifferentialForm.function(R3, R3.rf(x.scalar()) / R3.rf((y * y + 1).scalar())))
    with pytest.raises(RationalCoefficientUnsupported):
        poincare_potential(a)


def test_printing_uses_document_syntax():
    assert str(x * y * (dy ^ dz)) == "x*y*dy^dz"
    assert str(-(dx ^ dz)) == "-dx^dz"
    assert str(py * x - pz * z) == "x*@y - z*@z"


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        dx + (dx ^ dy)


@given(any_form())
def test_d_squared_vanishes(a):
    assert d(d(a)).is_zero()


@given(st.integers(1, 3).flatmap(forms), fields())
def test_cartan_formula(a, v):
    assert lie_derivative(v, a) == d(iota(v, a)) + iota(v, d(a))


@given(st.integers(1, 2).flatmap(forms), st.integers(0, 1).flatmap(forms), fields())
def test_interior_is_an_antiderivation(a, b, v):
    sign = -1 if a.degree % 2 else 1
    rhs = wedge(iota(v, a), b) + wedge(a, iota(v, b)).scale(sign) if b.degree else wedge(iota(v, a), b)
    assert iota(v, wedge(a, b)) == rhs


@given(st.integers(1, 3).flatmap(forms), fields(), fields())
def test_interior_of_bracket(a, v, w):
    assert iota(vf_bracket(v, w), a) == lie_derivative(v, iota(w, a)) - iota(w, lie_derivative(v, a))


@given(st.integers(1, 3).flatmap(forms), fields(), fields())
def test_interior_anticommutes(a, v, w):
    assert iota(v, iota(w, a)) == -iota(w, iota(v, a))


@given(fields(), fields(), fields())
def test_bracket_jacobi(u, v, w):
    total = vf_bracket(u, vf_bracket(v, w)) + vf_bracket(v, vf_bracket(w, u)) + vf_bracket(w, vf_bracket(u, v))
    assert total.is_zero()


@given(st.integers(1, 3).flatmap(lambda k: forms(k - 1)))
def test_exact_forms_have_potentials(b):
    a = d(b)
    if a.is_zero():
        return
    assert d(poincare_potential(a)) == a


@given(st.integers(1, 3).flatmap(forms))
def test_homotopy_formula(a):
    # a = d h a + h d a for forms of positive degree on a star-shaped chart
    assert d(homotopy_operator(a)) + homotopy_operator(d(a)) == a


@given(functions(), functions())
def test_d_is_a_derivation_on_functions(f, g):
    assert d(f * g) == g * d(f) + f * d(g)
