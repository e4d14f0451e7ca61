"""Polynomials and truncated power series over a :class:`FieldSpec`.

* :class:`BivariatePolynomial` - exact sparse polynomial in X, Y
* :class:`UniSeries` - univariate series known up to ``precision``
* :class:`YPolynomial` - element of k[[X]][Y], exact or X-truncated
"""

import logging
from math import comb
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from planebranch.kernel.field import FieldSpec
from planebranch.utils.errors import (
    CommonFactor,
    FieldMismatch,
    LeadingCoefficientNotUnit,
    NoRootInField,
    NotAUnit,
    PrecisionExhausted,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int]

X_VAR = "X"
Y_VAR = "Y"


def _check_same(a_spec: FieldSpec, b_spec: FieldSpec) -> None:
    if a_spec != b_spec:
        raise FieldMismatch(str(a_spec), str(b_spec))


def convolve(spec: FieldSpec, a: Sequence[Any], b: Sequence[Any], n: int) -> List[Any]:
    """First n coefficients of the product of two coefficient lists"""
    zero = spec.zero
    nz_b = [(k, c) for k, c in enumerate(b[:n]) if c]
    if spec.is_extension:
        res = [zero] * n
        for i, ai in enumerate(a[:n]):
            if not ai:
                continue
            lim = n - i
            for k, bk in nz_b:
                if k >= lim:
                    break
                res[i + k] = spec.add(res[i + k], spec.mul(ai, bk))
        return res
    res = [zero] * n
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        lim = n - i
        for k, bk in nz_b:
            if k >= lim:
                break
            res[i + k] += ai * bk
    p = spec.characteristic
    if p:
        res = [c % p for c in res]
    return res


class BivariatePolynomial:
    """Sparse polynomial: {(i, j): coefficient of X^i Y^j}, zero coefficients never stored"""

    __slots__ = ("spec", "terms", "_hash")

    def __init__(self, spec: FieldSpec, terms: Optional[Dict[Monomial, Any]] = None):
        self.spec = spec
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, spec: FieldSpec) -> "BivariatePolynomial":
        return cls(spec, {})

    @classmethod
    def constant(cls, spec: FieldSpec, c: Any) -> "BivariatePolynomial":
        return cls(spec, {(0, 0): c})

    @classmethod
    def one(cls, spec: FieldSpec) -> "BivariatePolynomial":
        return cls.constant(spec, spec.one)

    @classmethod
    def monomial(cls, spec: FieldSpec, i: int, j: int, c: Any = None) -> "BivariatePolynomial":
        return cls(spec, {(i, j): spec.one if c is None else c})

    @classmethod
    def x(cls, spec: FieldSpec) -> "BivariatePolynomial":
        return cls.monomial(spec, 1, 0)

    @classmethod
    def y(cls, spec: FieldSpec) -> "BivariatePolynomial":
        return cls.monomial(spec, 0, 1)

    @classmethod
    def from_int_terms(cls, spec: FieldSpec, terms: Dict[Monomial, int]) -> "BivariatePolynomial":
        return cls(spec, {m: spec.from_int(c) for m, c in terms.items()})

    @classmethod
    def from_x_coefficients(cls, spec: FieldSpec, coeffs: Sequence[Any], j: int = 0) -> "BivariatePolynomial":
        return cls(spec, {(i, j): c for i, c in enumerate(coeffs) if c})

    # Basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, i: int, j: int) -> Any:
        return self.terms.get((i, j), self.spec.zero)

    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial"""
        return max((i + j for i, j in self.terms), default=-1)

    def order(self) -> Optional[int]:
        """Lowest total degree present, None for zero"""
        return min((i + j for i, j in self.terms), default=None)

    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def x_order(self) -> Optional[int]:
        return min((i for i, _ in self.terms), default=None)

    def y_order(self) -> Optional[int]:
        return min((j for _, j in self.terms), default=None)

    def is_unit(self) -> bool:
        return bool(self.coefficient(0, 0))

    def homogeneous_part(self, d: int) -> "BivariatePolynomial":
        return BivariatePolynomial(self.spec, {m: c for m, c in self.terms.items() if m[0] + m[1] == d})

    def truncate(self, bound: Optional[int]) -> "BivariatePolynomial":
        """Drop every term of total degree >= bound"""
        if bound is None:
            return self
        return BivariatePolynomial(self.spec, {m: c for m, c in self.terms.items() if m[0] + m[1] < bound})

    def truncate_weighted(self, wx: int, wy: int, bound: int) -> "BivariatePolynomial":
        return BivariatePolynomial(
            self.spec, {m: c for m, c in self.terms.items() if wx * m[0] + wy * m[1] < bound}
        )

    def truncate_x(self, x_precision: Optional[int]) -> "BivariatePolynomial":
        if x_precision is None:
            return self
        return BivariatePolynomial(self.spec, {m: c for m, c in self.terms.items() if m[0] < x_precision})

    def y_coefficient(self, j: int) -> Dict[int, Any]:
        """Coefficient of Y^j as {i: c}"""
        return {i: c for (i, jj), c in self.terms.items() if jj == j}

    def y_coefficients(self) -> List["BivariatePolynomial"]:
        """[A_0, ..., A_r] with self = sum A_j(X) Y^j, each A_j a polynomial in X"""
        out = [dict() for _ in range(self.y_degree() + 1)]
        for (i, j), c in self.terms.items():
            out[j][(i, 0)] = c
        return [BivariatePolynomial(self.spec, t) for t in out]

    def leading_y_coefficient(self) -> "BivariatePolynomial":
        r = self.y_degree()
        return BivariatePolynomial(self.spec, {(i, 0): c for (i, j), c in self.terms.items() if j == r})

    def is_monic_in_y(self) -> bool:
        r = self.y_degree()
        lead = self.y_coefficient(r)
        return lead == {0: self.spec.one}

    # Arithmetic

    def _coerce(self, other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            _check_same(self.spec, other.spec)
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(self.spec, self.spec.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        spec = self.spec
        terms = dict(self.terms)
        for m, c in other.terms.items():
            if m in terms:
                terms[m] = spec.add(terms[m], c)
            else:
                terms[m] = c
        return BivariatePolynomial(spec, terms)

    __radd__ = __add__

    def __neg__(self):
        spec = self.spec
        return BivariatePolynomial(spec, {m: spec.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "BivariatePolynomial", bound: Optional[int] = None) -> "BivariatePolynomial":
        """Product, dropping terms of total degree >= bound when a bound is given"""
        _check_same(self.spec, other.spec)
        spec = self.spec
        acc: Dict[Monomial, Any] = {}
        left = list(self.terms.items())
        right = list(other.terms.items())
        if spec.is_extension:
            for (i1, j1), c1 in left:
                for (i2, j2), c2 in right:
                    if bound is not None and i1 + j1 + i2 + j2 >= bound:
                        continue
                    m = (i1 + i2, j1 + j2)
                    prod = spec.mul(c1, c2)
                    acc[m] = spec.add(acc[m], prod) if m in acc else prod
            return BivariatePolynomial(spec, acc)
        for (i1, j1), c1 in left:
            for (i2, j2), c2 in right:
                if bound is not None and i1 + j1 + i2 + j2 >= bound:
                    continue
                m = (i1 + i2, j1 + j2)
                acc[m] = acc.get(m, 0) + c1 * c2
        p = spec.characteristic
        if p:
            acc = {m: c % p for m, c in acc.items()}
        return BivariatePolynomial(spec, acc)

    def scale(self, c: Any) -> "BivariatePolynomial":
        spec = self.spec
        if not c:
            return BivariatePolynomial(spec, {})
        return BivariatePolynomial(spec, {m: spec.mul(v, c) for m, v in self.terms.items()})

    def shift(self, di: int, dj: int) -> "BivariatePolynomial":
        """Multiply by X^di Y^dj"""
        return BivariatePolynomial(self.spec, {(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def pow(self, n: int, bound: Optional[int] = None) -> "BivariatePolynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = BivariatePolynomial.one(self.spec).truncate(bound)
        base = self.truncate(bound)
        while n:
            if n & 1:
                result = result.mul(base, bound)
            n >>= 1
            if n:
                base = base.mul(base, bound)
        return result

    def __pow__(self, n: int):
        return self.pow(n)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(self.spec, self.spec.from_int(other))
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec, frozenset(self.terms.items())))
        return self._hash

    # Calculus

    def derivative(self, var: str) -> "BivariatePolynomial":
        return partial_derivative(self, var)

    def hasse(self, var: str, r: int) -> "BivariatePolynomial":
        return hasse_derivative(self, var, r)

    # Variable handling

    def swap(self) -> "BivariatePolynomial":
        return BivariatePolynomial(self.spec, {(j, i): c for (i, j), c in self.terms.items()})

    def x_power_dividing(self) -> int:
        return self.x_order() or 0

    def divide_by_x_power(self, a: int) -> "BivariatePolynomial":
        if any(i < a for i, _ in self.terms):
            raise ValueError(f"X^{a} does not divide the polynomial")
        return BivariatePolynomial(self.spec, {(i - a, j): c for (i, j), c in self.terms.items()})

    def compose(
        self,
        x_image: "BivariatePolynomial",
        y_image: "BivariatePolynomial",
        bound: Optional[int] = None,
    ) -> "BivariatePolynomial":
        """f(x_image, y_image), truncated below total degree bound when given"""
        spec = self.spec
        if self.is_zero():
            return self
        max_i = self.x_degree()
        x_powers = [BivariatePolynomial.one(spec).truncate(bound)]
        for _ in range(max_i):
            x_powers.append(x_powers[-1].mul(x_image, bound))
        result = BivariatePolynomial.zero(spec)
        for a_j in reversed(self.y_coefficients()):
            result = result.mul(y_image, bound)
            for (i, _), c in a_j.terms.items():
                result = result + x_powers[i].scale(c)
        return result.truncate(bound)

    def evaluate(self, xs: "UniSeries", ys: "UniSeries", precision: Optional[int] = None) -> "UniSeries":
        """f(x(t), y(t)) for series of positive order; the result carries its certified precision"""
        spec = self.spec
        _check_same(spec, xs.spec)
        _check_same(spec, ys.spec)
        ox = xs.order()
        oy = ys.order()
        ox = xs.precision if ox is None else ox
        oy = ys.precision if oy is None else oy
        if ox < 1 or oy < 1:
            raise ValueError("substituted series must have positive order")
        valid = None
        for i, j in self.terms:
            bounds = []
            if i > 0:
                bounds.append(xs.precision + (i - 1) * ox + j * oy)
            if j > 0:
                bounds.append(ys.precision + i * ox + (j - 1) * oy)
            if bounds:
                b = min(bounds)
                valid = b if valid is None else min(valid, b)
        if valid is None:
            valid = precision if precision is not None else max(xs.precision, ys.precision)
        n = valid if precision is None else min(valid, precision)
        xc = list(xs.coeffs[:n]) + [spec.zero] * max(0, n - xs.precision)
        yc = list(ys.coeffs[:n]) + [spec.zero] * max(0, n - ys.precision)
        one = [spec.one] + [spec.zero] * (n - 1) if n else []
        x_powers = [one]
        for _ in range(self.x_degree()):
            x_powers.append(convolve(spec, x_powers[-1], xc, n))
        acc = [spec.zero] * n
        for a_j in reversed(self.y_coefficients()):
            acc = convolve(spec, acc, yc, n)
            for (i, _), c in a_j.terms.items():
                xp = x_powers[i]
                acc = [spec.add(u, spec.mul(c, v)) if v else u for u, v in zip(acc, xp)]
        return UniSeries(spec, acc, n)

    # Printing

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        spec = self.spec
        parts = []
        for (i, j) in sorted(self.terms, key=lambda m: (-m[1], m[0])):
            c = self.terms[(i, j)]
            mono = []
            if i:
                mono.append("X" if i == 1 else f"X^{i}")
            if j:
                mono.append("Y" if j == 1 else f"Y^{j}")
            negative = spec.characteristic == 0 and c < 0
            mag = -c if negative else c
            cstr = spec.to_str(mag)
            if not mono:
                body = cstr
            elif mag == spec.one:
                body = "*".join(mono)
            else:
                body = "*".join([cstr] + mono)
            parts.append(("-" if negative else "+") + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.spec}, {self.to_str()})"


# Derivatives


def partial_derivative(f: BivariatePolynomial, var: str) -> BivariatePolynomial:
    return hasse_derivative(f, var, 1)


def hasse_derivative(f: BivariatePolynomial, var: str, r: int) -> BivariatePolynomial:
    """D^r: c X^i Y^j -> c binom(j, r) X^i Y^(j-r) (resp. in X)"""
    if r < 0:
        raise ValueError("derivative order must be non-negative")
    spec = f.spec
    out: Dict[Monomial, Any] = {}
    for (i, j), c in f.terms.items():
        e = i if var == X_VAR else j
        if e < r:
            continue
        b = spec.from_int(comb(e, r))
        if not b:
            continue
        m = (i - r, j) if var == X_VAR else (i, j - r)
        out[m] = spec.mul(c, b)
    return BivariatePolynomial(spec, out)


def poly_ring_ops(f: BivariatePolynomial, g, op: str) -> BivariatePolynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "pow":
        return f.pow(int(g))
    raise ValueError(f"unknown ring operation {op!r}")


class UniSeries:
    """Series c_0 + c_1 t + ... known exactly below ``precision``"""

    __slots__ = ("spec", "coeffs", "precision")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[Any], precision: int):
        if precision < 0:
            raise ValueError("precision must be non-negative")
        coeffs = list(coeffs)[:precision]
        if len(coeffs) < precision:
            coeffs.extend([spec.zero] * (precision - len(coeffs)))
        self.spec = spec
        self.coeffs = coeffs
        self.precision = precision

    @classmethod
    def zero(cls, spec: FieldSpec, precision: int) -> "UniSeries":
        return cls(spec, [], precision)

    @classmethod
    def one(cls, spec: FieldSpec, precision: int) -> "UniSeries":
        return cls(spec, [spec.one], precision)

    @classmethod
    def monomial(cls, spec: FieldSpec, k: int, precision: int, c: Any = None) -> "UniSeries":
        coeffs = [spec.zero] * k + [spec.one if c is None else c]
        return cls(spec, coeffs, precision)

    @classmethod
    def from_x_polynomial(cls, poly: BivariatePolynomial, precision: int) -> "UniSeries":
        """A polynomial in X alone read as a series in X"""
        spec = poly.spec
        coeffs = [spec.zero] * precision
        for (i, j), c in poly.terms.items():
            if j:
                raise ValueError("polynomial depends on Y")
            if i < precision:
                coeffs[i] = c
        return cls(spec, coeffs, precision)

    def to_x_polynomial(self) -> BivariatePolynomial:
        return BivariatePolynomial.from_x_coefficients(self.spec, self.coeffs)

    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None when zero to precision"""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return self.order() is None

    def coefficient(self, k: int) -> Any:
        if k >= self.precision:
            raise PrecisionExhausted(f"coefficient {k}", self.precision)
        return self.coeffs[k]

    def truncate(self, precision: int) -> "UniSeries":
        return UniSeries(self.spec, self.coeffs, min(precision, self.precision))

    def _binary(self, other: "UniSeries") -> int:
        _check_same(self.spec, other.spec)
        return min(self.precision, other.precision)

    def __add__(self, other: "UniSeries") -> "UniSeries":
        n = self._binary(other)
        add = self.spec.add
        return UniSeries(self.spec, [add(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        n = self._binary(other)
        sub = self.spec.sub
        return UniSeries(self.spec, [sub(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    def __neg__(self) -> "UniSeries":
        return UniSeries(self.spec, [self.spec.neg(c) for c in self.coeffs], self.precision)

    def __mul__(self, other: "UniSeries") -> "UniSeries":
        if not isinstance(other, UniSeries):
            return NotImplemented
        _check_same(self.spec, other.spec)
        # a known to P_a with order o_a times b known to P_b with order o_b
        oa = self.order()
        ob = other.order()
        oa = self.precision if oa is None else oa
        ob = other.precision if ob is None else ob
        n = min(self.precision + ob, other.precision + oa)
        a = self.coeffs + [self.spec.zero] * max(0, n - self.precision)
        b = other.coeffs + [self.spec.zero] * max(0, n - other.precision)
        return UniSeries(self.spec, convolve(self.spec, a, b, n), n)

    def scale(self, c: Any) -> "UniSeries":
        mul = self.spec.mul
        return UniSeries(self.spec, [mul(v, c) for v in self.coeffs], self.precision)

    def shift(self, k: int) -> "UniSeries":
        """t^k * self"""
        return UniSeries(self.spec, [self.spec.zero] * k + self.coeffs, self.precision + k)

    def pow(self, n: int) -> "UniSeries":
        result = UniSeries.one(self.spec, self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> "UniSeries":
        spec = self.spec
        coeffs = [spec.scale_int(c, k) for k, c in enumerate(self.coeffs)][1:]
        return UniSeries(spec, coeffs, max(self.precision - 1, 0))

    def compose(self, inner: "UniSeries") -> "UniSeries":
        """self(inner) for inner of positive order"""
        _check_same(self.spec, inner.spec)
        o = inner.order()
        if o is None:
            o = inner.precision
        if o < 1:
            raise ValueError("inner series must have positive order")
        n = min(self.precision * o, inner.precision)
        spec = self.spec
        ic = inner.coeffs[:n] + [spec.zero] * max(0, n - inner.precision)
        acc = [spec.zero] * n
        # Horner
        for c in reversed(self.coeffs):
            acc = convolve(spec, acc, ic, n)
            if n:
                acc[0] = spec.add(acc[0], c)
        return UniSeries(spec, acc, n)

    def inverse(self) -> "UniSeries":
        return series_inverse(self)

    def nth_root(self, n: int) -> "UniSeries":
        return series_nth_root(self, n)

    def frobenius_root(self) -> "UniSeries":
        """Coefficientwise p-th root of a series in t^p"""
        spec = self.spec
        p = spec.characteristic
        if any(c for k, c in enumerate(self.coeffs) if k % p):
            raise NoRootInField(p, str(spec))
        coeffs = [spec.frobenius_root(c) for c in self.coeffs[::p]]
        return UniSeries(spec, coeffs, -(-self.precision // p))

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return self.spec == other.spec and self.coeffs[:n] == other.coeffs[:n]

    def __repr__(self) -> str:
        shown = " + ".join(
            f"{self.spec.to_str(c)}*t^{k}" for k, c in enumerate(self.coeffs) if c
        )
        return f"UniSeries({shown or '0'} + O(t^{self.precision}))"


def series_inverse(u: UniSeries) -> UniSeries:
    spec = u.spec
    if u.precision == 0:
        return u
    u0 = u.coeffs[0]
    if not u0:
        raise NotAUnit("series")
    inv0 = spec.inv(u0)
    v = [inv0]
    for k in range(1, u.precision):
        acc = spec.zero
        for i in range(1, k + 1):
            ui = u.coeffs[i]
            if ui:
                acc = spec.add(acc, spec.mul(ui, v[k - i]))
        v.append(spec.neg(spec.mul(inv0, acc)))
    return UniSeries(spec, v, u.precision)


def series_nth_root(u: UniSeries, n: int) -> UniSeries:
    """v with v^n = u to the precision of u"""
    spec = u.spec
    if n == 1 or u.precision == 0:
        return u
    u0 = u.coeffs[0]
    if not u0:
        raise NotAUnit("series")
    p = spec.characteristic
    if p and n % p == 0:
        # v^(p m) = u  <=>  (v^m) is the p-th root of u
        inner = series_nth_root(u, n // p)
        return inner.frobenius_root()
    c0 = spec.nth_root(u0, n)
    normalized = u.scale(spec.inv(u0))
    n_elem = spec.from_int(n)
    w = UniSeries.one(spec, 1)
    prec = 1
    while prec < u.precision:
        prec = min(2 * prec, u.precision)
        w = w.truncate(prec)
        w = UniSeries(spec, w.coeffs, prec)
        target = normalized.truncate(prec)
        residual = w.pow(n) - target
        denom = w.pow(n - 1).scale(n_elem)
        w = w - (residual * denom.inverse()).truncate(prec)
        w = w.truncate(prec)
    return w.scale(c0).truncate(u.precision)


def substitute(f: BivariatePolynomial, image_x, image_y, precision: Optional[int] = None):
    """Composition with series or polynomial images"""
    if isinstance(image_x, UniSeries):
        return f.evaluate(image_x, image_y, precision)
    if precision is not None and any(not image.is_zero() and image.order() < 1 for image in (image_x, image_y)):
        raise ValueError("images must lie in the maximal ideal for a truncated composition")
    return f.compose(image_x, image_y, precision)


class YPolynomial:
    """An element of k[[X]][Y]: exact when x_precision is None, else known modulo X^x_precision"""

    __slots__ = ("poly", "x_precision")

    def __init__(self, poly: BivariatePolynomial, x_precision: Optional[int] = None):
        self.poly = poly.truncate_x(x_precision)
        self.x_precision = x_precision

    @property
    def spec(self) -> FieldSpec:
        return self.poly.spec

    @property
    def degree(self) -> int:
        return self.poly.y_degree()

    def coefficients(self) -> List[UniSeries]:
        """[A_0, ..., A_r] leading first, as series in X"""
        prec = self.x_precision if self.x_precision is not None else self.poly.x_degree() + 1
        cols = self.poly.y_coefficients()
        return [UniSeries.from_x_polynomial(a, max(prec, 1)) for a in reversed(cols)]

    def is_monic(self) -> bool:
        return self.poly.is_monic_in_y()

    def _combine_precision(self, other: "YPolynomial") -> Optional[int]:
        precs = [p for p in (self.x_precision, other.x_precision) if p is not None]
        return min(precs) if precs else None

    def __add__(self, other: "YPolynomial") -> "YPolynomial":
        return YPolynomial(self.poly + other.poly, self._combine_precision(other))

    def __sub__(self, other: "YPolynomial") -> "YPolynomial":
        return YPolynomial(self.poly - other.poly, self._combine_precision(other))

    def __mul__(self, other: "YPolynomial") -> "YPolynomial":
        return YPolynomial(self.poly * other.poly, self._combine_precision(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, YPolynomial):
            return NotImplemented
        prec = self._combine_precision(other)
        return self.poly.truncate_x(prec) == other.poly.truncate_x(prec)

    def __repr__(self) -> str:
        tail = "" if self.x_precision is None else f" + O(X^{self.x_precision})"
        return f"YPolynomial({self.poly.to_str()}{tail})"

    def divmod(self, other: "YPolynomial") -> Tuple["YPolynomial", "YPolynomial"]:
        return y_poly_divide(self, other)


def _x_series_inverse_poly(lead: BivariatePolynomial, x_precision: int) -> BivariatePolynomial:
    inv = series_inverse(UniSeries.from_x_polynomial(lead, x_precision))
    return inv.to_x_polynomial()


def y_poly_divide(a: YPolynomial, b: YPolynomial, x_precision: Optional[int] = None) -> Tuple[YPolynomial, YPolynomial]:
    """(q, r) with a = q*b + r and deg_Y r < deg_Y b

    Exact for a monic divisor; otherwise the leading coefficient must be a
    unit series and the result is known modulo X^x_precision.
    """
    _check_same(a.spec, b.spec)
    spec = a.spec
    r_deg = b.degree
    if r_deg < 0:
        raise LeadingCoefficientNotUnit()
    prec = a._combine_precision(b)
    lead = b.poly.leading_y_coefficient()
    divisor = b.poly
    lead_inverse = None
    if not b.is_monic():
        if not lead.is_unit():
            raise LeadingCoefficientNotUnit()
        if prec is None:
            prec = x_precision
        if prec is None:
            prec = 2 * (a.poly.x_degree() + b.poly.x_degree() + 1)
        lead_inverse = _x_series_inverse_poly(lead, prec)
        divisor = divisor.mul(lead_inverse).truncate_x(prec)
        divisor = _clean_leading(divisor, r_deg)
    remainder = a.poly.truncate_x(prec)
    quotient_terms: Dict[Monomial, Any] = {}
    below = {(i, j): c for (i, j), c in divisor.terms.items() if j < r_deg}
    below_poly = BivariatePolynomial(spec, below)
    while remainder.y_degree() >= r_deg:
        top = remainder.y_degree()
        lead_a = BivariatePolynomial(
            spec, {(i, 0): c for (i, j), c in remainder.terms.items() if j == top}
        )
        shift = top - r_deg
        for (i, _), c in lead_a.terms.items():
            quotient_terms[(i, shift)] = spec.add(quotient_terms.get((i, shift), spec.zero), c)
        stripped = BivariatePolynomial(spec, {m: c for m, c in remainder.terms.items() if m[1] != top})
        correction = lead_a.mul(below_poly).shift(0, shift)
        remainder = (stripped - correction).truncate_x(prec)
    quotient = BivariatePolynomial(spec, quotient_terms)
    if lead_inverse is not None:
        quotient = quotient.mul(lead_inverse).truncate_x(prec)
    return YPolynomial(quotient, prec), YPolynomial(remainder, prec)


def _clean_leading(poly: BivariatePolynomial, r: int) -> BivariatePolynomial:
    terms = {m: c for m, c in poly.terms.items() if m[1] != r}
    terms[(0, r)] = poly.spec.one
    return BivariatePolynomial(poly.spec, terms)


# Univariate dense polynomials in X (lowest degree first) for the resultant


def _upoly_trim(a: List[Any]) -> List[Any]:
    while a and not a[-1]:
        a.pop()
    return a


def _upoly_mul(spec: FieldSpec, a: List[Any], b: List[Any]) -> List[Any]:
    if not a or not b:
        return []
    return _upoly_trim(convolve(spec, a, b, len(a) + len(b) - 1))


def _upoly_sub(spec: FieldSpec, a: List[Any], b: List[Any]) -> List[Any]:
    n = max(len(a), len(b))
    a = a + [spec.zero] * (n - len(a))
    b = b + [spec.zero] * (n - len(b))
    return _upoly_trim([spec.sub(x, y) for x, y in zip(a, b)])


def _upoly_exact_div(spec: FieldSpec, a: List[Any], b: List[Any]) -> List[Any]:
    a = list(a)
    if not a:
        return []
    db = len(b) - 1
    inv_lead = spec.inv(b[-1])
    q = [spec.zero] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if not c:
            continue
        factor = spec.mul(c, inv_lead)
        q[k - db] = factor
        for i, bi in enumerate(b):
            if bi:
                a[k - db + i] = spec.sub(a[k - db + i], spec.mul(factor, bi))
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _upoly_trim(q)


def sylvester_matrix(f: BivariatePolynomial, g: BivariatePolynomial) -> List[List[List[Any]]]:
    """Sylvester matrix in Y with entries dense polynomials in X"""
    spec = f.spec
    m, n = f.y_degree(), g.y_degree()

    def column_list(poly: BivariatePolynomial) -> List[List[Any]]:
        cols = poly.y_coefficients()
        out = []
        for a in reversed(cols):
            dense = [spec.zero] * (a.x_degree() + 1)
            for (i, _), c in a.terms.items():
                dense[i] = c
            out.append(dense)
        return out

    fc, gc = column_list(f), column_list(g)
    size = m + n
    rows = []
    for k in range(n):
        rows.append([[] for _ in range(k)] + fc + [[] for _ in range(size - k - len(fc))])
    for k in range(m):
        rows.append([[] for _ in range(k)] + gc + [[] for _ in range(size - k - len(gc))])
    return rows


def bareiss_determinant(spec: FieldSpec, matrix: List[List[List[Any]]]) -> List[Any]:
    """Fraction-free determinant over k[X]"""
    mat = [[list(e) for e in row] for row in matrix]
    size = len(mat)
    if size == 0:
        return [spec.one]
    sign = 1
    prev = [spec.one]
    for k in range(size - 1):
        if not mat[k][k]:
            swap = next((r for r in range(k + 1, size) if mat[r][k]), None)
            if swap is None:
                return []
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _upoly_sub(
                    spec,
                    _upoly_mul(spec, mat[i][j], pivot),
                    _upoly_mul(spec, mat[i][k], mat[k][j]),
                )
                mat[i][j] = _upoly_exact_div(spec, num, prev)
            mat[i][k] = []
        prev = pivot
    det = mat[size - 1][size - 1]
    if sign < 0:
        det = [spec.neg(c) for c in det]
    return det


def resultant_y(f: BivariatePolynomial, g: BivariatePolynomial) -> UniSeries:
    """Res_Y(f, g) as an exact polynomial in X, returned as a series past its degree"""
    _check_same(f.spec, g.spec)
    spec = f.spec
    if f.y_degree() == 0 and g.y_degree() == 0:
        raise CommonFactor("resultant of two Y-free polynomials")
    det = bareiss_determinant(spec, sylvester_matrix(f, g))
    if not det:
        raise CommonFactor("resultant")
    return UniSeries(spec, det, len(det) + 1)
