"""Exterior calculus on a single global coordinate chart.

Forms are sparse maps from strictly increasing index tuples to rational
functions.  The interior product contracts the FIRST slot:

    (iota_v a)(u1, ..., u_{k-1}) = a(v, u1, ..., u_{k-1})

so that ``iota(v3, iota(v2, iota(v1, a))) == a(v1, v2, v3)``.  Every sign in
the higher modules is stated relative to this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .algebra import Polynomial, RationalFunction, Rational, Q, as_rf, is_scalar
from .errors import ChartMismatch, DegreeMismatch, NotClosed, RationalCoefficientUnsupported


@dataclass(frozen=True)
class Chart:
    """An ordered set of coordinate names; the chart is all of R^n."""

    dimension: int
    coordinates: tuple[str, ...]

    def __post_init__(self):
        if self.dimension != len(self.coordinates):
            raise ValueError("dimension must equal the number of coordinates")
        if len(set(self.coordinates)) != len(self.coordinates):
            raise ValueError("coordinate names must be distinct")
        if self.dimension < 1:
            raise ValueError("a chart needs at least one coordinate")

    @classmethod
    def of(cls, *names: str) -> "Chart":
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(len(names), tuple(names))

    def index(self, name: str) -> int:
        try:
            return self.coordinates.index(name)
        except ValueError:
            raise KeyError(f"unknown coordinate {name!r}") from None

    # convenience constructors
    def poly(self, terms: Mapping = ()) -> Polynomial:
        return Polynomial(self.coordinates, terms)

    def rf(self, value) -> RationalFunction:
        return as_rf(value, self.coordinates)

    def coord(self, name: str) -> "DifferentialForm":
        return DifferentialForm.function(self, Polynomial.variable(self.coordinates, name))

    def const(self, c) -> "DifferentialForm":
        return DifferentialForm.function(self, Polynomial.constant(self.coordinates, c))

    def dx(self, name: str) -> "DifferentialForm":
        return DifferentialForm(self, 1, {(self.index(name),): 1})

    def basis(self, *names: str) -> "DifferentialForm":
        out = self.const(1)
        for n in names:
            out = wedge(out, self.dx(n))
        return out

    def partial(self, name: str) -> "VectorField":
        i = self.index(name)
        return VectorField(self, [1 if j == i else 0 for j in range(self.dimension)])

    def zero_form(self, degree: int) -> "DifferentialForm":
        return DifferentialForm(self, degree, {})

    def zero_field(self) -> "VectorField":
        return VectorField(self, [0] * self.dimension)

    def euler_field(self) -> "VectorField":
        return VectorField(self, [Polynomial.variable(self.coordinates, c) for c in self.coordinates])


def _require_same_chart(a, b):
    if a.chart != b.chart:
        raise ChartMismatch(f"objects live on different charts: {a.chart} vs {b.chart}")


def _accumulate(acc: dict, key, value: RationalFunction):
    prev = acc.get(key)
    acc[key] = value if prev is None else prev + value


def _clean(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if not v.is_zero()}


def _coeff_str(c: RationalFunction) -> tuple[str, str]:
    """Split a coefficient into (sign, body) for printing in front of a basis element."""
    if c.is_polynomial() and len(c.num.terms) == 1:
        (e, v), = c.num.terms.items()
        sign = "-" if v < 0 else "+"
        mag = Polynomial(c.variables, {e: -v if v < 0 else v})
        return sign, str(mag)
    return "+", f"({c})"


class DifferentialForm:
    """A k-form on a chart with rational-function coefficients."""

    __slots__ = ("chart", "degree", "coeffs", "_hash")

    def __init__(self, chart: Chart, degree: int, coeffs: Mapping[tuple[int, ...], object] = ()):
        if degree < 0:
            raise DegreeMismatch("form degree must be non-negative")
        self.chart = chart
        self.degree = degree
        clean = {}
        n = chart.dimension
        for idx, c in dict(coeffs).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise DegreeMismatch(f"index {idx} does not have length {degree}")
            if any(i < 0 or i >= n for i in idx) or any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index tuple {idx} is not strictly increasing in range")
            c = as_rf(c, chart.coordinates)
            if not c.is_zero():
                clean[idx] = c
        self.coeffs = clean
        self._hash = None

    @classmethod
    def _raw(cls, chart, degree, coeffs):
        obj = cls.__new__(cls)
        obj.chart, obj.degree, obj.coeffs, obj._hash = chart, degree, coeffs, None
        return obj

    @classmethod
    def function(cls, chart: Chart, value) -> "DifferentialForm":
        return cls(chart, 0, {(): value})

    # --- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs.values())

    def scalar(self) -> RationalFunction:
        """The coefficient of a 0-form."""
        if self.degree != 0:
            raise DegreeMismatch(f"expected a 0-form, got degree {self.degree}")
        return self.coeffs.get((), RationalFunction.zero(self.chart.coordinates))

    def coefficient(self, idx) -> RationalFunction:
        return self.coeffs.get(tuple(idx), RationalFunction.zero(self.chart.coordinates))

    def max_degree(self) -> int:
        return max((c.total_degree() for c in self.coeffs.values()), default=-1)

    def at(self, point) -> dict:
        """Constant coefficients at a rational point."""
        return {k: v.evaluate(point) for k, v in self.coeffs.items()}

    # --- arithmetic ---------------------------------------------------
    def _same(self, other: "DifferentialForm"):
        _require_same_chart(self, other)
        if other.degree != self.degree:
            raise DegreeMismatch(f"cannot combine a {self.degree}-form with a {other.degree}-form")

    def __add__(self, other):
        if not isinstance(other, DifferentialForm):
            if self.degree == 0 and (is_scalar(other) or isinstance(other, (Polynomial, RationalFunction))):
                other = DifferentialForm.function(self.chart, other)
            else:
                return NotImplemented
        self._same(other)
        if not other.coeffs:
            return self
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _accumulate(acc, k, v)
        return DifferentialForm._raw(self.chart, self.degree, _clean(acc))

    __radd__ = __add__

    def __neg__(self):
        return DifferentialForm._raw(self.chart, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, DifferentialForm):
            return self + (-other)
        if self.degree == 0 and (is_scalar(other) or isinstance(other, (Polynomial, RationalFunction))):
            return self + (-as_rf(other, self.chart.coordinates))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, f) -> "DifferentialForm":
        """Multiply by a scalar, polynomial, rational function or 0-form."""
        if isinstance(f, DifferentialForm):
            if f.degree != 0:
                raise DegreeMismatch("scale expects a 0-form")
            _require_same_chart(self, f)
            f = f.scalar()
        if is_scalar(f):
            c = Q(f)
            if not c:
                return self.chart.zero_form(self.degree)
            return DifferentialForm._raw(self.chart, self.degree, {k: v * c for k, v in self.coeffs.items()})
        f = as_rf(f, self.chart.coordinates)
        if f.is_zero():
            return self.chart.zero_form(self.degree)
        return DifferentialForm._raw(self.chart, self.degree,
                                     _clean({k: v * f for k, v in self.coeffs.items()}))

    def __mul__(self, other):
        if isinstance(other, DifferentialForm):
            if self.degree == 0:
                return other.scale(self)
            if other.degree == 0:
                return self.scale(other)
            return wedge(self, other)
        if is_scalar(other) or isinstance(other, (Polynomial, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, (Polynomial, RationalFunction)):
            return self.scale(other)
        return NotImplemented

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, DifferentialForm):
            return self.chart == other.chart and self.degree == other.degree and self.coeffs == other.coeffs
        if self.degree == 0 and (is_scalar(other) or isinstance(other, (Polynomial, RationalFunction))):
            return self.scalar() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.chart, self.degree, frozenset(self.coeffs.items())))
        return self._hash

    # --- printing -----------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        if self.degree == 0:
            c = self.scalar()
            return str(c) if c.is_polynomial() else f"({c})"
        names = self.chart.coordinates
        pieces = []
        for idx in sorted(self.coeffs):
            c = self.coeffs[idx]
            basis = "^".join("d" + names[i] for i in idx)
            sign, body = _coeff_str(c)
            text = basis if body == "1" else f"{body}*{basis}"
            pieces.append((sign, text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"DifferentialForm[{self.degree}]({self})"


class VectorField:
    """A vector field: one rational-function component per coordinate."""

    __slots__ = ("chart", "components", "_hash")

    def __init__(self, chart: Chart, components: Sequence):
        if len(components) != chart.dimension:
            raise ValueError(f"expected {chart.dimension} components, got {len(components)}")
        self.chart = chart
        self.components = tuple(as_rf(c, chart.coordinates) for c in components)
        self._hash = None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.components)

    def __add__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        _require_same_chart(self, other)
        return VectorField(self.chart, [a + b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return VectorField(self.chart, [-c for c in self.components])

    def __sub__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self + (-other)

    def scale(self, f) -> "VectorField":
        if isinstance(f, DifferentialForm):
            f = f.scalar()
        if not is_scalar(f):
            f = as_rf(f, self.chart.coordinates)
        return VectorField(self.chart, [c * f for c in self.components])

    def __mul__(self, other):
        if isinstance(other, VectorField):
            return NotImplemented
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.chart == other.chart and self.components == other.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.chart, self.components))
        return self._hash

    def apply(self, f) -> "DifferentialForm":
        """Directional derivative v(f) of a function, returned as a 0-form."""
        if isinstance(f, DifferentialForm):
            _require_same_chart(self, f)
            f = f.scalar()
        f = as_rf(f, self.chart.coordinates)
        acc = RationalFunction.zero(self.chart.coordinates)
        for i, vi in enumerate(self.components):
            if not vi.is_zero():
                di = f.diff(i)
                if not di.is_zero():
                    acc = acc + vi * di
        return DifferentialForm.function(self.chart, acc)

    def at(self, point) -> tuple[Rational, ...]:
        return tuple(c.evaluate(point) for c in self.components)

    def __str__(self):
        names = self.chart.coordinates
        pieces = []
        for i, c in enumerate(self.components):
            if c.is_zero():
                continue
            sign, body = _coeff_str(c)
            text = f"@{names[i]}" if body == "1" else f"{body}*@{names[i]}"
            pieces.append((sign, text))
        if not pieces:
            return "0"
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"VectorField({self})"


# --- operations -------------------------------------------------------------

def _merge_sign(I: tuple[int, ...], J: tuple[int, ...]) -> int:
    """Sign of the permutation sorting the concatenation I+J (both increasing, disjoint)."""
    inversions = 0
    for i in I:
        for j in J:
            if j < i:
                inversions += 1
    return -1 if inversions & 1 else 1


def wedge(a: DifferentialForm, b: DifferentialForm) -> DifferentialForm:
    _require_same_chart(a, b)
    deg = a.degree + b.degree
    if deg > a.chart.dimension:
        return a.chart.zero_form(deg)
    acc: dict = {}
    for I, ca in a.coeffs.items():
        sI = set(I)
        for J, cb in b.coeffs.items():
            if sI.intersection(J):
                continue
            key = tuple(sorted(I + J))
            term = ca * cb
            if _merge_sign(I, J) < 0:
                term = -term
            _accumulate(acc, key, term)
    return DifferentialForm._raw(a.chart, deg, _clean(acc))


def d(a: DifferentialForm) -> DifferentialForm:
    """Exterior derivative."""
    n = a.chart.dimension
    acc: dict = {}
    for I, c in a.coeffs.items():
        for j in range(n):
            if j in I:
                continue
            dc = c.diff(j)
            if dc.is_zero():
                continue
            pos = sum(1 for i in I if i < j)
            key = I[:pos] + (j,) + I[pos:]
            _accumulate(acc, key, -dc if pos & 1 else dc)
    return DifferentialForm._raw(a.chart, a.degree + 1, _clean(acc))


def iota(v: VectorField, a: DifferentialForm) -> DifferentialForm:
    """Interior product, contracting the first slot."""
    _require_same_chart(v, a)
    if a.degree == 0:
        return a.chart.zero_form(0)
    acc: dict = {}
    comps = v.components
    for I, c in a.coeffs.items():
        for p, i in enumerate(I):
            vi = comps[i]
            if vi.is_zero():
                continue
            term = vi * c
            _accumulate(acc, I[:p] + I[p + 1:], -term if p & 1 else term)
    return DifferentialForm._raw(a.chart, a.degree - 1, _clean(acc))


def lie_derivative(v: VectorField, a: DifferentialForm) -> DifferentialForm:
    """Cartan formula L_v = iota_v d + d iota_v."""
    _require_same_chart(v, a)
    out = iota(v, d(a))
    if a.degree > 0:
        out = out + d(iota(v, a))
    return out


def vf_bracket(v: VectorField, w: VectorField) -> VectorField:
    """Lie bracket [v, w] = v∘w - w∘v."""
    _require_same_chart(v, w)
    comps = []
    for wi, vi in zip(w.components, v.components):
        comps.append(v.apply(wi).scalar() - w.apply(vi).scalar())
    return VectorField(v.chart, comps)


def contract(a: DifferentialForm, vs: Sequence[VectorField]) -> DifferentialForm:
    """Fill the leading slots: contract(a, [v1, v2]) = a(v1, v2, ...)."""
    if len(vs) > a.degree:
        raise DegreeMismatch(f"{len(vs)} arguments for a {a.degree}-form")
    out = a
    for v in vs:
        out = iota(v, out)
    return out


def form_eval(a: DifferentialForm, vs: Sequence[VectorField]) -> RationalFunction:
    """Full evaluation a(v1, ..., vk)."""
    if len(vs) != a.degree:
        raise DegreeMismatch(f"a {a.degree}-form needs {a.degree} arguments, got {len(vs)}")
    return contract(a, vs).scalar()


def homotopy_operator(a: DifferentialForm) -> DifferentialForm:
    """Radial homotopy h with dh + hd = id on forms of degree >= 1 (polynomial coefficients)."""
    if a.degree == 0:
        raise DegreeMismatch("the homotopy operator lowers degree; 0-forms have no image")
    if not a.is_polynomial():
        raise RationalCoefficientUnsupported("radial integration needs polynomial coefficients")
    chart, k = a.chart, a.degree
    coords = chart.coordinates
    xs = [Polynomial.variable(coords, c) for c in coords]
    acc: dict = {}
    for I, c in a.coeffs.items():
        # integral_0^1 t^(k-1) t^m dt = 1/(m+k) for each monomial of degree m
        radial = Polynomial(coords, {e: v / (sum(e) + k) for e, v in c.num.terms.items()})
        for p, i in enumerate(I):
            term = RationalFunction._poly(radial * xs[i])
            _accumulate(acc, I[:p] + I[p + 1:], -term if p & 1 else term)
    return DifferentialForm._raw(chart, k - 1, _clean(acc))


def poincare_potential(a: DifferentialForm) -> DifferentialForm:
    """A primitive b with d(b) = a for a closed polynomial form of degree >= 1."""
    if not a.is_polynomial():
        raise RationalCoefficientUnsupported("poincare_potential needs polynomial coefficients")
    da = d(a)
    if not da.is_zero():
        raise NotClosed(da)
    return homotopy_operator(a)


def forms_basis(chart: Chart, degree: int) -> list[tuple[int, ...]]:
    return list(combinations(range(chart.dimension), degree))


def sum_forms(forms: Iterable[DifferentialForm], chart: Chart, degree: int) -> DifferentialForm:
    out = chart.zero_form(degree)
    for f in forms:
        out = out + f
    return out
