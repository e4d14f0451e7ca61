"""Normalization of an equation by coordinate changes only.

Units never multiply the equation here: in positive characteristic a unit
multiple can change the Milnor number, while an automorphism cannot.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from planebranch.config import settings
from planebranch.kernel.algebra import BivariatePolynomial, UniSeries, YPolynomial, hasse_derivative
from planebranch.kernel.branch import tangent_data
from planebranch.kernel.field import FieldSpec
from planebranch.utils.errors import (
    CharacteristicDividesMultiplicity,
    CharacteristicDividesR,
    HypothesisViolated,
    NoPureYTerm,
    NoRootInField,
    Reducible,
)

logger = logging.getLogger(__name__)


@dataclass
class RecordedAutomorphism:
    """(X, Y) -> (image_x, image_y), known modulo M^precision when precision is set"""

    image_x: BivariatePolynomial
    image_y: BivariatePolynomial
    precision: Optional[int] = None
    _inverse: Optional["RecordedAutomorphism"] = field(default=None, repr=False, compare=False)

    @classmethod
    def identity(cls, spec: FieldSpec, precision: Optional[int] = None) -> "RecordedAutomorphism":
        return cls(BivariatePolynomial.x(spec), BivariatePolynomial.y(spec), precision)

    @property
    def spec(self) -> FieldSpec:
        return self.image_x.spec

    def linear_part(self) -> Tuple[Tuple, Tuple]:
        lx, ly = self.image_x.homogeneous_part(1), self.image_y.homogeneous_part(1)
        return (
            (lx.coefficient(1, 0), lx.coefficient(0, 1)),
            (ly.coefficient(1, 0), ly.coefficient(0, 1)),
        )

    def jacobian(self):
        (a, b), (c, d) = self.linear_part()
        spec = self.spec
        return spec.sub(spec.mul(a, d), spec.mul(b, c))

    def is_identity(self) -> bool:
        return self.image_x == BivariatePolynomial.x(self.spec) and self.image_y == BivariatePolynomial.y(self.spec)

    def is_linear(self) -> bool:
        return all(m[0] + m[1] == 1 for image in (self.image_x, self.image_y) for m in image.terms)

    def then(self, other: "RecordedAutomorphism") -> "RecordedAutomorphism":
        """The change of coordinates applying self first, then other"""
        precs = [p for p in (self.precision, other.precision) if p is not None]
        bound = min(precs) if precs else None
        return RecordedAutomorphism(
            self.image_x.compose(other.image_x, other.image_y, bound),
            self.image_y.compose(other.image_x, other.image_y, bound),
            bound,
        )

    def inverse(self) -> "RecordedAutomorphism":
        if self._inverse is None:
            self._inverse = _invert(self)
        return self._inverse

    def apply(self, f: BivariatePolynomial) -> BivariatePolynomial:
        return apply_automorphism(self, f)

    def describe(self) -> dict:
        return {"X": self.image_x.to_str(), "Y": self.image_y.to_str(), "precision": self.precision}


def apply_automorphism(phi: RecordedAutomorphism, f: BivariatePolynomial) -> BivariatePolynomial:
    return f.compose(phi.image_x, phi.image_y, phi.precision)


def _invert(phi: RecordedAutomorphism) -> RecordedAutomorphism:
    spec = phi.spec
    det = phi.jacobian()
    if not det:
        raise HypothesisViolated("invertible linear part", {"jacobian": spec.to_str(det)})
    (a, b), (c, d) = phi.linear_part()
    inv_det = spec.inv(det)
    # inverse of the linear part
    ia, ib = spec.mul(d, inv_det), spec.neg(spec.mul(b, inv_det))
    ic, id_ = spec.neg(spec.mul(c, inv_det)), spec.mul(a, inv_det)
    x = BivariatePolynomial.x(spec)
    y = BivariatePolynomial.y(spec)
    if phi.is_linear():
        return RecordedAutomorphism(x.scale(ia) + y.scale(ib), x.scale(ic) + y.scale(id_), phi.precision)
    bound = phi.precision or max(phi.image_x.degree(), phi.image_y.degree()) + settings.prep_precision
    higher_x = phi.image_x - phi.image_x.homogeneous_part(1)
    higher_y = phi.image_y - phi.image_y.homogeneous_part(1)
    psi_x, psi_y = x, y
    # psi = L^-1 (id - higher(psi)) gains one degree per round
    for _ in range(bound):
        rx = x - higher_x.compose(psi_x, psi_y, bound)
        ry = y - higher_y.compose(psi_x, psi_y, bound)
        new_x = (rx.scale(ia) + ry.scale(ib)).truncate(bound)
        new_y = (rx.scale(ic) + ry.scale(id_)).truncate(bound)
        if new_x == psi_x and new_y == psi_y:
            break
        psi_x, psi_y = new_x, new_y
    return RecordedAutomorphism(psi_x, psi_y, bound)


def _pure_y_exponent(f: BivariatePolynomial) -> int:
    pure = [j for (i, j) in f.terms if i == 0]
    if not pure:
        raise NoPureYTerm()
    return min(pure)


def levinson_prepare(
    f: BivariatePolynomial, precision: Optional[int] = None
) -> Tuple[RecordedAutomorphism, YPolynomial]:
    """Y -> Phi(X, Y) turning f into A_0 Y^r + ... + A_r with A_0(0) != 0 and A_i(0) = 0"""
    spec = f.spec
    r = _pure_y_exponent(f)
    p = spec.characteristic
    if p and r % p == 0:
        raise CharacteristicDividesR(r, p)
    if f.y_degree() == r:
        return RecordedAutomorphism.identity(spec), YPolynomial(f)

    n = precision or settings.prep_precision
    if n <= r + 1:
        n = r + 2
    c = f.coefficient(0, r)
    rc = spec.mul(spec.from_int(r), c)

    # X^0 slice: f(0, phi0(Y)) = c Y^r
    f0 = UniSeries(spec, [f.coefficient(0, j) for j in range(n)], n)
    phi0 = UniSeries.monomial(spec, 1, n)
    for d in range(r + 1, n):
        value = f0.compose(phi0)
        h_d = value.coeffs[d]
        if h_d:
            phi0 = phi0 - UniSeries.monomial(spec, d - r + 1, n, spec.div(h_d, rc))

    # first Hasse derivative in Y; the slice solve divides by r c, a unit since p does not divide r
    fy = hasse_derivative(f, "Y", 1)
    fy0 = UniSeries(spec, [fy.coefficient(0, j) for j in range(n)], n).compose(phi0)
    w = UniSeries(spec, fy0.coeffs[r - 1 :], n - r + 1)
    w_inverse = w.inverse()

    x = BivariatePolynomial.x(spec)
    phi = BivariatePolynomial(spec, {(0, j): cj for j, cj in enumerate(phi0.coeffs) if cj})
    for k in range(1, n):
        g = f.compose(x, phi, n)
        high = {j: cj for (i, j), cj in g.terms.items() if i == k and j > r}
        if not high:
            continue
        width = n - k
        slice_series = UniSeries(spec, [high.get(j, spec.zero) for j in range(r - 1, width)], width - r + 1)
        correction = slice_series * w_inverse.truncate(width - r + 1)
        terms = dict(phi.terms)
        for j, cj in enumerate(correction.coeffs):
            if cj and k + j < n:
                terms[(k, j)] = spec.sub(terms.get((k, j), spec.zero), cj)
        phi = BivariatePolynomial(spec, terms)
        logger.debug("levinson slice X^%d corrected", k)

    automorphism = RecordedAutomorphism(x, phi, n)
    prepared = f.compose(x, phi, n)
    if any(j > r for _, j in prepared.terms):
        raise HypothesisViolated("Levinson shape", {"equation": f.to_str(), "precision": n})
    x_precision = n - r
    return automorphism, YPolynomial(prepared, x_precision)


def _tangent_to_y(f: BivariatePolynomial) -> RecordedAutomorphism:
    """Linear change moving the tangent line of f to Y = 0"""
    spec = f.spec
    tangent = tangent_data(f)
    if tangent.is_split:
        raise Reducible(0, tangent.multiplicity)
    x = BivariatePolynomial.x(spec)
    y = BivariatePolynomial.y(spec)
    if tangent.vertical:
        return RecordedAutomorphism(y, x)
    if tangent.theta:
        return RecordedAutomorphism(x, y + x.scale(tangent.theta))
    return RecordedAutomorphism.identity(spec)


def is_weierstrass(poly: YPolynomial) -> bool:
    """Monic of degree n with mult(B_i) > i for the coefficient B_i of Y^(n-i)"""
    if not poly.is_monic():
        return False
    n = poly.degree
    for (i, j), _ in poly.poly.terms.items():
        if j < n and i <= n - j:
            return False
    return True


def weierstrass_by_coords(
    f: BivariatePolynomial, precision: Optional[int] = None
) -> Tuple[RecordedAutomorphism, YPolynomial]:
    """Monic Weierstrass form of f by coordinate changes.

    precision is the X-precision the result must carry when a series step is
    needed; without it settings.prep_precision is used.  The result is exact
    when x_precision is None.
    """
    spec = f.spec
    n = f.order()
    p = spec.characteristic
    if p and n % p == 0:
        raise CharacteristicDividesMultiplicity(n, p)
    linear = _tangent_to_y(f)
    g = apply_automorphism(linear, f)
    prep_aut, prepared = levinson_prepare(g, precision + n if precision else None)
    if prepared.degree != n:
        raise HypothesisViolated("pure Y power equals the multiplicity", {"degree": prepared.degree, "multiplicity": n})
    xp = prepared.x_precision
    lead = prepared.poly.leading_y_coefficient()
    c0 = lead.coefficient(0, 0)
    if lead.degree() == 0 and c0 == spec.one:
        result = prepared
        scaling = RecordedAutomorphism.identity(spec)
    else:
        if not spec.has_nth_root(c0, n):
            raise NoRootInField(n, str(spec), spec.minimal_root_extension(c0, n))
        x = BivariatePolynomial.x(spec)
        y = BivariatePolynomial.y(spec)
        if lead.degree() == 0:
            lam = spec.inv(spec.nth_root(c0, n))
            scaling = RecordedAutomorphism(x, y.scale(lam))
            terms = {(i, j): spec.mul(c, spec.pow(lam, j)) for (i, j), c in prepared.poly.terms.items()}
            result = YPolynomial(BivariatePolynomial(spec, terms), xp)
        else:
            width = xp or precision or settings.prep_precision
            lam = UniSeries.from_x_polynomial(lead, width).nth_root(n).inverse()
            scaling = RecordedAutomorphism(x, lam.to_x_polynomial() * y, width)
            terms = {}
            power = UniSeries.one(spec, width)
            for j, a_j in enumerate(prepared.poly.y_coefficients()):
                scaled = (UniSeries.from_x_polynomial(a_j, width) * power).truncate(width)
                terms.update({(i, j): cij for i, cij in enumerate(scaled.coeffs) if cij})
                power = (power * lam).truncate(width)
            terms = {m: cij for m, cij in terms.items() if m[1] != n}
            terms[(0, n)] = spec.one
            result = YPolynomial(BivariatePolynomial(spec, terms), width)
    automorphism = linear.then(prep_aut).then(scaling)
    if not is_weierstrass(result):
        raise HypothesisViolated("Weierstrass shape", {"equation": f.to_str()})
    logger.debug("weierstrass form %s", result)
    return automorphism, result


__all__ = [
    "RecordedAutomorphism",
    "apply_automorphism",
    "is_weierstrass",
    "levinson_prepare",
    "weierstrass_by_coords",
]
