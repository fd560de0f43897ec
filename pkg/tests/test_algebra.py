from hypothesis import given
from hypothesis import strategies as st

from courantkit.algebra import Polynomial, Q, RationalFunction, poly_diff, poly_eval, poly_gcd

from conftest import R3, polynomials, rationals

V = ("x", "y")


def P(terms):
    return Polynomial(V, terms)


x, y = Polynomial.variable(V, "x"), Polynomial.variable(V, "y")


def test_evaluate_examples():
    assert poly_eval(x * x + y, (2, 3)) == 7
    assert poly_eval(P({}), (5, 7)) == 0
    assert poly_eval(x * y - Q("1/2"), (Q("1/2"), Q("1/3"))) == Q("-1/3")


def test_diff_examples():
    xyz = Polynomial.variable(R3.coordinates, "x")
    yy = Polynomial.variable(R3.coordinates, "y")
    assert poly_diff(xyz ** 2 * yy, "x") == (xyz * yy).scale(2)
    assert poly_diff(xyz ** 2 * yy, "z").is_zero()
    assert poly_diff((x ** 3).scale(Q("1/3")) + x * y ** 2, "x") == x ** 2 + y ** 2


def test_printing():
    assert str(x ** 2 - (x * y).scale(Q("1/2")) + 3) == "x^2 - 1/2*x*y + 3"
    assert str(P({})) == "0"


def test_on_line_coefficients():
    # p(t) along (1,0) + t(1,2) for p = x*y: (1+t)(2t) = 2t + 2t^2
    assert (x * y).on_line((1, 0), (1, 2)) == [0, 2, 2]


def test_exact_division_and_gcd():
    a = (x + y) * (x - 1)
    assert a.exact_div(x - 1) == x + y
    g = poly_gcd(a, (x + y) * (y + 2))
    assert g == x + y or g == -(x + y)


def test_rational_function_normalizes():
    f = RationalFunction((x + 1) * y, (x + 1) * x)
    assert f == RationalFunction(y, x)
    assert (f * RationalFunction(x)).is_polynomial()


@given(polynomials(), polynomials(), polynomials())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == Polynomial.zero(a.variables)


@given(polynomials(), polynomials())
def test_evaluation_is_a_ring_map(a, b):
    pt = (Q(2), Q(-1), Q("1/3"))
    assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
    assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


@given(polynomials())
def test_mixed_partials_commute(p):
    assert p.diff("x").diff("y") == p.diff("y").diff("x")


@given(polynomials(), polynomials().filter(lambda q: not q.is_zero()), rationals)
def test_field_laws(a, b, c):
    f = RationalFunction(a, b)
    g = RationalFunction(b + c)
    assert (f + g) - g == f
    if not f.is_zero():
        assert f * f.inverse() == RationalFunction.constant(R3.coordinates, 1)


@given(polynomials(), polynomials())
def test_product_rule(a, b):
    assert (a * b).diff("z") == a.diff("z") * b + a * b.diff("z")
