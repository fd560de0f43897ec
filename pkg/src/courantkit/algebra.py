"""Exact scalars: multivariate polynomials and rational functions over Q.

Coefficients are ``gmpy2.mpq``.  Every value is immutable once built; all
operations return new objects.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from operator import add
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

Rational = type(mpq(0))

_ZERO = mpq(0)
_ONE = mpq(1)


def Q(value) -> Rational:
    """Coerce ints, Fractions, strings ``"p/q"`` and mpq values to mpq."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, Rational)) and not isinstance(value, bool)


def format_rational(c: Rational) -> str:
    c = Q(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class Polynomial:
    """Sparse polynomial in a fixed, ordered tuple of variables."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], object] = ()):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exp, c in dict(terms).items():
            c = Q(c)
            if c:
                exp = tuple(exp)
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} does not match {n} variables")
                clean[exp] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables, terms):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._hash = None
        return obj

    # --- constructors -------------------------------------------------
    @classmethod
    def zero(cls, variables) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, c) -> "Polynomial":
        variables = tuple(variables)
        c = Q(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def variable(cls, variables, name: str) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls._raw(variables, {exp: _ONE})

    # --- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), _ZERO)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * len(self.variables)) == _ONE

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading_term(self) -> tuple[tuple[int, ...], Rational]:
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def coefficients(self) -> list[Rational]:
        return list(self.terms.values())

    # --- arithmetic ---------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if is_scalar(other):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, _ZERO) + c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        return Polynomial._raw(self.variables, res)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = Q(c)
        if not c:
            return Polynomial._raw(self.variables, {})
        return Polynomial._raw(self.variables, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        res: dict = {}
        get = res.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                res[e] = get(e, _ZERO) + c1 * c2
        return Polynomial._raw(self.variables, {e: c for e, c in res.items() if c})

    def __rmul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if is_scalar(other):
            return self.is_constant() and self.constant_value() == Q(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    # --- calculus and evaluation -------------------------------------
    def diff(self, coord) -> "Polynomial":
        """Formal partial derivative with respect to a variable name or index."""
        i = self._index(coord)
        res = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                res[ne] = c * k
        return Polynomial._raw(self.variables, res)

    def _index(self, coord) -> int:
        if isinstance(coord, int):
            if not 0 <= coord < len(self.variables):
                raise KeyError(f"no variable with index {coord}")
            return coord
        try:
            return self.variables.index(coord)
        except ValueError:
            raise KeyError(f"unknown coordinate {coord!r}") from None

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point: Sequence) -> Rational:
        if len(point) != len(self.variables):
            raise ValueError(f"point has {len(point)} entries, expected {len(self.variables)}")
        pt = [Q(p) for p in point]
        total = _ZERO
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def on_line(self, start: Sequence, direction: Sequence) -> list[Rational]:
        """Coefficients (ascending powers of t) of p(start + t*direction)."""
        a = [Q(v) for v in start]
        b = [Q(v) for v in direction]
        out: list = [_ZERO]
        for e, c in self.terms.items():
            term = [c]
            for ai, bi, k in zip(a, b, e):
                for _ in range(k):
                    nxt = [_ZERO] * (len(term) + 1)
                    for j, t in enumerate(term):
                        nxt[j] += t * ai
                        nxt[j + 1] += t * bi
                    term = nxt
            if len(term) > len(out):
                out.extend([_ZERO] * (len(term) - len(out)))
            for j, t in enumerate(term):
                out[j] += t
        return out

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient self/other; raises ArithmeticError unless the division is exact."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            return self.scale(1 / other.constant_value())
        lt_e, lt_c = other.leading_term()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            diff = tuple(a - b for a, b in zip(e, lt_e))
            if min(diff) < 0:
                raise ArithmeticError("polynomial division is not exact")
            q = c / lt_c
            quot[diff] = q
            for oe, oc in other.terms.items():
                ne = tuple(map(add, diff, oe))
                v = rem.get(ne, _ZERO) - q * oc
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return Polynomial._raw(self.variables, quot)

    # --- printing -----------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]), reverse=True)

    def monomial_str(self, exp) -> str:
        parts = []
        for name, k in zip(self.variables, exp):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_str(e)
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if mono:
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            else:
                body = format_rational(a)
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


# --- gcd via sympy's sparse polynomial rings -------------------------------

@lru_cache(maxsize=None)
def _sympy_ring(variables: tuple[str, ...]):
    from sympy.polys.domains import QQ
    from sympy.polys.rings import ring

    R, *_ = ring(",".join(variables), QQ)
    return R


def _to_sympy(p: Polynomial):
    R = _sympy_ring(p.variables)
    dom = R.domain
    return R.from_dict({e: dom(int(c.numerator), int(c.denominator)) for e, c in p.terms.items()})


def _from_sympy(variables, sp) -> Polynomial:
    return Polynomial(variables, {tuple(e): mpq(int(c.numerator), int(c.denominator)) for e, c in sp.items()})


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic (grlex) greatest common divisor."""
    a._check(b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return Polynomial.constant(a.variables, 1)
    g = _from_sympy(a.variables, _to_sympy(a).gcd(_to_sympy(b)))
    return g.scale(1 / g.leading_term()[1])


class RationalFunction:
    """num/den over Q, kept in lowest terms with a monic (grlex) denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.constant(num.variables, 1)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Polynomial.constant(num.variables, 1)
        elif den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num.scale(1 / c)
                den = Polynomial.constant(num.variables, 1)
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc = den.leading_term()[1]
            if lc != 1:
                num = num.scale(1 / lc)
                den = den.scale(1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _poly(cls, p: Polynomial) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj.num = p
        obj.den = Polynomial._raw(p.variables, {(0,) * len(p.variables): _ONE})
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, variables, c) -> "RationalFunction":
        return cls._poly(Polynomial.constant(variables, c))

    @classmethod
    def zero(cls, variables) -> "RationalFunction":
        return cls._poly(Polynomial.zero(variables))

    @property
    def variables(self):
        return self.num.variables

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def total_degree(self) -> int:
        return max(self.num.total_degree(), self.den.total_degree())

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction._poly(other)
        if is_scalar(other):
            return RationalFunction.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._poly(self.num + other.num)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        obj = RationalFunction.__new__(RationalFunction)
        obj.num, obj.den, obj._hash = -self.num, self.den, None
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            c = Q(other)
            if not c:
                return RationalFunction.zero(self.variables)
            obj = RationalFunction.__new__(RationalFunction)
            obj.num, obj.den, obj._hash = self.num.scale(c), self.den, None
            return obj
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._poly(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.den.is_one():
            return RationalFunction._poly(self.num ** k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial):
            return self.den.is_one() and self.num == other
        if is_scalar(other):
            return self.is_constant() and self.constant_value() == Q(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def diff(self, coord) -> "RationalFunction":
        if self.den.is_one():
            return RationalFunction._poly(self.num.diff(coord))
        n, d = self.num, self.den
        return RationalFunction(n.diff(coord) * d - n * d.diff(coord), d * d)

    def evaluate(self, point: Sequence) -> Rational:
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError(f"denominator vanishes at {tuple(point)}")
        return self.num.evaluate(point) / d

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def as_rf(value, variables) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction._poly(value)
    return RationalFunction.constant(variables, value)


def poly_eval(p: Polynomial, point: Sequence) -> Rational:
    return p.evaluate(point)


def poly_diff(p: Polynomial, coord) -> Polynomial:
    return p.diff(coord)


def lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    g = poly_gcd(a, b)
    return (a * b).exact_div(g)


def rationals(values: Iterable) -> tuple[Rational, ...]:
    return tuple(Q(v) for v in values)
