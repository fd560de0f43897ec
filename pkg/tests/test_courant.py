import random

from hypothesis import given
from hypothesis import strategies as st

from courantkit.algebra import Q
from courantkit.courant import (GeneralizedSection, SplitCourantModel, SplittingShift, T_tri, D_func, anchor,
                                change_splitting, curvature, lie2_of_courant, lie2_of_preserving, pairing_minus,
                                pairing_plus, preserves_splitting, restore_splitting, shifted_curvature,
                                shifted_twist, twisted_courant, twisted_dorfman, verify_courant_axioms)
from courantkit.exterior import d, form_eval
from courantkit.generators import GeneratorConfig, random_field, random_form, random_section

from conftest import R3, fields, forms, functions

x, y, z = (R3.coord(c) for c in "xyz")
dx, dy, dz = (R3.dx(c) for c in "xyz")
px, py, pz = (R3.partial(c) for c in "xyz")
VOL = R3.basis("x", "y", "z")
S = GeneralizedSection
s = GeneralizedSection.lift
M = SplitCourantModel(R3, VOL)
M0 = SplitCourantModel.standard(R3)
G = GeneratorConfig(max_degree=2)


def sections():
    return st.builds(S, fields(max_degree=2), forms(1, max_degree=2))


def test_pairings():
    e1, e2 = S(px, y * dz), S(pz, x * dx)
    assert pairing_plus(e1, e2) == x + y
    assert pairing_minus(e1, e2) == x - y
    assert pairing_plus(s(px), s(py)).is_zero()
    assert pairing_plus(D_func(x), D_func(y)).is_zero()


def test_anchor_and_D():
    assert anchor(S(px, y * dz)) == px
    assert anchor(D_func(x * y)).is_zero()
    assert D_func(x * y) == S(R3.zero_field(), y * dx + x * dy)
    assert D_func(R3.const(3)).is_zero()


def test_bracket_examples():
    assert twisted_courant(M, s(px), s(py)) == S(R3.zero_field(), -dz)
    assert twisted_dorfman(M, s(px), s(py)) == S(R3.zero_field(), -dz)
    e = S(px * y, x * dz)
    assert twisted_courant(M, e, e).is_zero()
    # standard bracket: L_dx(x dy) = dy and i_dx(x dy) = 0
    assert twisted_courant(M0, s(px), S.cotangent(x * dy)) == S(R3.zero_field(), dy)


def test_T_and_curvature_examples():
    assert T_tri(M, s(px), s(py), s(pz)) == R3.const(Q("-1/2"))
    assert curvature(M, px, py, pz) == R3.const(-1)
    assert curvature(M, px, px, pz).is_zero()
    assert curvature(M0, px * y, pz, py * x).is_zero()
    assert T_tri(M0, s(px), s(py), s(pz)).is_zero()


def test_splitting_shift_examples():
    B = x * (dy ^ dz)
    assert shifted_twist(M, SplittingShift(dx ^ dy)) == VOL
    # curvature of s + B is -omega + dB, so the twist seen by s + B is omega - dB
    assert shifted_twist(M0, SplittingShift(B)) == -VOL
    assert shifted_curvature(M0, SplittingShift(B), px, py, pz) == R3.const(1)
    assert change_splitting(SplittingShift(B), s(px)) == S(px, -iota_(px, B))


def iota_(v, a):
    from courantkit.exterior import iota
    return iota(v, a)


def test_preservation_examples():
    assert preserves_splitting(M, S(-pz, x * dy))
    verdict = preserves_splitting(M, S.cotangent(x * dy))
    assert not verdict and verdict.certificate == dx ^ dy
    assert preserves_splitting(M, D_func(x * z))


def test_axioms_on_coordinate_lifts():
    assert verify_courant_axioms(M, s(px), s(py), s(pz), x, y).ok
    zero = S.zero(R3)
    assert verify_courant_axioms(M, zero, zero, zero, x, y).ok


def test_lie2_of_courant_examples():
    L = lie2_of_courant(M)
    es = [L.element0(s(v)) for v in (px, py, pz)]
    assert L.J(*es).payload == -T_tri(M, s(px), s(py), s(pz))
    assert L.bracket(L.element1(x), L.element1(y)).is_zero()


def test_preserving_sections_close_under_the_bracket():
    a, b = S(-pz, x * dy), S(-px, y * dz)
    L = lie2_of_preserving(M)
    assert preserves_splitting(M, L.bracket(L.element0(a), L.element0(b)).payload)


@given(sections(), sections(), sections(), functions(max_degree=2), functions(max_degree=2))
def test_axioms_hold_for_both_twists(e1, e2, e3, f, g):
    assert verify_courant_axioms(M, e1, e2, e3, f, g).ok
    assert verify_courant_axioms(M0, e1, e2, e3, f, g).ok


@given(fields(), fields(), fields())
def test_curvature_is_minus_the_twist(v1, v2, v3):
    assert curvature(M, v1, v2, v3) == -form_eval(VOL, [v1, v2, v3])


@given(forms(2, max_degree=2), fields(), fields(), fields())
def test_shifted_curvature(B, v1, v2, v3):
    shift = SplittingShift(B)
    assert shifted_curvature(M, shift, v1, v2, v3) == -form_eval(VOL - d(B), [v1, v2, v3])
    assert shifted_twist(M, shift) == VOL - d(B)


@given(forms(2, max_degree=2), sections(), sections())
def test_shift_is_bracket_equivariant(B, e1, e2):
    shift = SplittingShift(B)
    M2 = SplitCourantModel(R3, shifted_twist(M, shift))
    lhs = change_splitting(shift, twisted_courant(M, e1, e2))
    assert lhs == twisted_courant(M2, change_splitting(shift, e1), change_splitting(shift, e2))
    assert restore_splitting(shift, change_splitting(shift, e1)) == e1


@given(sections(), sections())
def test_courant_is_the_skew_part_of_dorfman(e1, e2):
    sym = twisted_dorfman(M, e1, e2) + twisted_dorfman(M, e2, e1)
    assert twisted_dorfman(M, e1, e2) - sym.scale(Q("1/2")) == twisted_courant(M, e1, e2)
