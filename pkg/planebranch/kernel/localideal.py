"""Standard bases in k[[X, Y]] under the local degree order.

Two modes share one data structure:

* exact: Mora's tangent-cone normal form with ecart selection, used for small
  polynomial ideals;
* truncated: computation in k[X, Y]/M^N where the local order is a finite
  well-order and plain reduction terminates. A basis is certified finite once
  every monomial of some degree d < N lies in the lead ideal, since then
  M^d is contained in I + M^(d+1) and Nakayama gives M^d in I.

The driver :func:`certified_basis` doubles N until a certificate appears,
capped by the Bezout bound deg^2 beyond which finite colength is impossible.
"""

import logging
import random
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import GF, QQ, Poly, Rational, symbols

from planebranch.config import settings
from planebranch.kernel.algebra import BivariatePolynomial, Monomial
from planebranch.kernel.field import FieldSpec
from planebranch.kernel.linalg import rank
from planebranch.kernel.values import INFINITE, Count, MuStability, is_infinite
from planebranch.utils.errors import BoundExhausted, NotIsolated, NotPrimary

logger = logging.getLogger(__name__)

Terms = Dict[Monomial, Any]

LOCAL_DEGREE_ORDER = "local-degree"

_SX, _SY = symbols("X Y")


def order_key(m: Monomial) -> Tuple[int, int]:
    """Larger key = larger monomial: lower total degree first, then higher X exponent"""
    return (-(m[0] + m[1]), m[0])


def lead_monomial(terms: Terms) -> Monomial:
    return max(terms, key=order_key)


def _divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _ecart(terms: Terms, lead: Monomial) -> int:
    return max(i + j for i, j in terms) - (lead[0] + lead[1])


@dataclass
class _Element:
    terms: Terms
    lead: Monomial
    ecart: int

    @classmethod
    def of(cls, spec: FieldSpec, terms: Terms) -> "_Element":
        lead = lead_monomial(terms)
        inv = spec.inv(terms[lead])
        monic = {m: spec.mul(c, inv) for m, c in terms.items()}
        return cls(monic, lead, _ecart(monic, lead))


def _subtract_multiple(spec: FieldSpec, h: Terms, g: Terms, shift: Monomial, factor: Any, bound: Optional[int]) -> None:
    """h -= factor * X^a Y^b * g in place, dropping degrees >= bound"""
    di, dj = shift
    p = spec.characteristic
    fast = not spec.is_extension
    for (i, j), c in g.items():
        m = (i + di, j + dj)
        if bound is not None and m[0] + m[1] >= bound:
            continue
        if fast:
            v = h.get(m, 0) - factor * c
            if p:
                v %= p
        else:
            v = spec.sub(h.get(m, spec.zero), spec.mul(factor, c))
        if v:
            h[m] = v
        else:
            h.pop(m, None)


def _find_reducer(elements: Sequence[_Element], lm: Monomial) -> Optional[_Element]:
    best = None
    for e in elements:
        if _divides(e.lead, lm) and (best is None or len(e.terms) < len(best.terms)):
            best = e
    return best


def _truncate(terms: Terms, bound: Optional[int]) -> Terms:
    if bound is None:
        return dict(terms)
    return {m: c for m, c in terms.items() if m[0] + m[1] < bound}


def _top_reduce(spec: FieldSpec, h: Terms, elements: Sequence[_Element], bound: int) -> Terms:
    h = _truncate(h, bound)
    while h:
        lm = lead_monomial(h)
        g = _find_reducer(elements, lm)
        if g is None:
            return h
        shift = (lm[0] - g.lead[0], lm[1] - g.lead[1])
        _subtract_multiple(spec, h, g.terms, shift, h[lm], bound)
    return h


def _full_reduce(spec: FieldSpec, h: Terms, elements: Sequence[_Element], bound: int) -> Terms:
    h = _truncate(h, bound)
    remainder: Terms = {}
    while h:
        lm = lead_monomial(h)
        g = _find_reducer(elements, lm)
        if g is None:
            remainder[lm] = h.pop(lm)
            continue
        shift = (lm[0] - g.lead[0], lm[1] - g.lead[1])
        _subtract_multiple(spec, h, g.terms, shift, h[lm], bound)
    return remainder


def _mora_normal_form(spec: FieldSpec, h: Terms, elements: Sequence[_Element]) -> Terms:
    """Weak normal form with ecart selection"""
    h = dict(h)
    reducers = list(elements)
    while h:
        lm = lead_monomial(h)
        candidates = [e for e in reducers if _divides(e.lead, lm)]
        if not candidates:
            return h
        g = min(candidates, key=lambda e: (e.ecart, len(e.terms)))
        h_ecart = _ecart(h, lm)
        if g.ecart > h_ecart:
            reducers.append(_Element.of(spec, h))
        shift = (lm[0] - g.lead[0], lm[1] - g.lead[1])
        _subtract_multiple(spec, h, g.terms, shift, h[lm], None)
    return h


def _spoly(spec: FieldSpec, a: _Element, b: _Element, bound: Optional[int]) -> Terms:
    lcm = (max(a.lead[0], b.lead[0]), max(a.lead[1], b.lead[1]))
    h: Terms = {}
    _subtract_multiple(spec, h, a.terms, (lcm[0] - a.lead[0], lcm[1] - a.lead[1]), spec.neg(spec.one), bound)
    _subtract_multiple(spec, h, b.terms, (lcm[0] - b.lead[0], lcm[1] - b.lead[1]), spec.one, bound)
    return h


def _buchberger(spec: FieldSpec, gens: Iterable[Terms], bound: Optional[int]) -> List[_Element]:
    def reduce_(h: Terms) -> Terms:
        if bound is None:
            return _mora_normal_form(spec, h, elements)
        return _top_reduce(spec, h, elements, bound)

    elements: List[_Element] = []
    pairs: List[Tuple[int, int]] = []

    def add(h: Terms) -> None:
        e = _Element.of(spec, h)
        k = len(elements)
        elements.append(e)
        for i in range(k):
            a = elements[i].lead
            if min(a[0], e.lead[0]) == 0 and min(a[1], e.lead[1]) == 0:
                # coprime leads
                continue
            pairs.append((i, k))

    for g in gens:
        h = reduce_(_truncate(g, bound))
        if h:
            add(h)
    processed = 0
    while pairs:
        pairs.sort(key=lambda ij: -sum(_lcm(elements[ij[0]].lead, elements[ij[1]].lead)))
        i, k = pairs.pop()
        h = reduce_(_spoly(spec, elements[i], elements[k], bound))
        processed += 1
        if h:
            add(h)
    logger.debug("standard basis: %d elements, %d pairs reduced, bound=%s", len(elements), processed, bound)
    return elements


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return (max(a[0], b[0]), max(a[1], b[1]))


def _minimal_leads(leads: Iterable[Monomial]) -> List[Monomial]:
    uniq = sorted(set(leads))
    return sorted(m for m in uniq if not any(o != m and _divides(o, m) for o in uniq))


@dataclass
class StandardBasis:
    spec: FieldSpec
    generators: List[BivariatePolynomial]
    elements: List[_Element]
    bound: Optional[int]
    finite: Optional[bool]
    certificate_degree: Optional[int] = None
    infinite_reason: Optional[str] = None
    order: str = LOCAL_DEGREE_ORDER
    lead_ideal: List[Monomial] = field(default_factory=list)

    @property
    def basis(self) -> List[BivariatePolynomial]:
        return [BivariatePolynomial(self.spec, e.terms) for e in self.elements]

    def in_lead_ideal(self, m: Monomial) -> bool:
        return any(_divides(lead, m) for lead in self.lead_ideal)

    def has_pure_powers(self) -> Tuple[bool, bool]:
        return (
            any(b == 0 for _, b in self.lead_ideal),
            any(a == 0 for a, _ in self.lead_ideal),
        )


def _unit_basis(spec: FieldSpec, gens: List[BivariatePolynomial], bound: Optional[int]) -> StandardBasis:
    one = _Element(terms={(0, 0): spec.one}, lead=(0, 0), ecart=0)
    return StandardBasis(spec, gens, [one], bound, True, 0, lead_ideal=[(0, 0)])


def _full_degree(lead_ideal: List[Monomial], d: int) -> bool:
    return all(any(_divides(lead, (i, d - i)) for lead in lead_ideal) for i in range(d + 1))


def bezout_bound(gens: Sequence[BivariatePolynomial]) -> int:
    """Colength of an M-primary ideal never exceeds the square of the largest degree"""
    d = max((g.degree() for g in gens), default=0)
    return d * d


def common_factor_at_origin(gens: Sequence[BivariatePolynomial]) -> Optional[bool]:
    """True when the generators share a factor through the origin, None when undecidable here"""
    nonzero = [g for g in gens if g]
    if not nonzero:
        return True
    spec = nonzero[0].spec
    if spec.is_extension:
        return None
    if spec.characteristic:
        domain = GF(spec.characteristic)
        polys = [Poly.from_dict({m: int(c) for m, c in g.terms.items()}, _SX, _SY, domain=domain) for g in nonzero]
    else:
        polys = [
            Poly.from_dict({m: Rational(c.numerator, c.denominator) for m, c in g.terms.items()}, _SX, _SY, domain=QQ)
            for g in nonzero
        ]
    common = reduce(lambda a, b: a.gcd(b), polys)
    if common.total_degree() == 0:
        return False
    return not common.as_dict().get((0, 0), 0)


def standard_basis(gens: Sequence[BivariatePolynomial], bound: Optional[int] = None) -> StandardBasis:
    """Standard basis of the ideal generated by gens in k[[X, Y]]

    With ``bound`` None the computation is exact (Mora). With a bound it runs
    modulo M^bound and raises BoundExhausted if finiteness stays undecided.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("the zero ideal has no standard basis here")
    spec = gens[0].spec
    if any(g.is_unit() for g in gens):
        return _unit_basis(spec, gens, bound)
    elements = _buchberger(spec, [g.terms for g in gens], bound)
    lead_ideal = _minimal_leads(e.lead for e in elements)
    sb = StandardBasis(spec, gens, elements, bound, None, lead_ideal=lead_ideal)
    if bound is None:
        has_y, has_x = sb.has_pure_powers()
        if has_x and has_y:
            sb.finite = True
            sb.certificate_degree = _exact_certificate_degree(lead_ideal)
        else:
            sb.finite = False
            sb.infinite_reason = "lead ideal lacks a pure power"
        return sb
    for d in range(bound):
        if _full_degree(lead_ideal, d):
            sb.finite = True
            sb.certificate_degree = d
            return sb
    common = common_factor_at_origin(gens)
    if common:
        sb.finite = False
        sb.infinite_reason = "generators share a factor through the origin"
        return sb
    if bound > bezout_bound(gens):
        sb.finite = False
        sb.infinite_reason = "no certificate below the Bezout bound"
        return sb
    raise BoundExhausted("finiteness of the colength", bound)


def _exact_certificate_degree(lead_ideal: List[Monomial]) -> int:
    a = min(m[0] for m in lead_ideal if m[1] == 0)
    b = min(m[1] for m in lead_ideal if m[0] == 0)
    for d in range(a + b + 1):
        if _full_degree(lead_ideal, d):
            return d
    return a + b


def certified_basis(gens: Sequence[BivariatePolynomial], bound: Optional[int] = None) -> StandardBasis:
    """Truncated standard basis with automatic bound doubling"""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("the zero ideal has no standard basis here")
    if any(g.is_unit() for g in gens):
        return _unit_basis(gens[0].spec, gens, bound)
    cap = bezout_bound(gens) + 1
    if bound is None:
        if common_factor_at_origin(gens):
            spec = gens[0].spec
            sb = StandardBasis(spec, gens, [], None, False, infinite_reason="generators share a factor through the origin")
            return sb
        bound = settings.sb_initial_bound
    bound = min(bound, cap)
    doublings = 0
    while True:
        try:
            return standard_basis(gens, bound)
        except BoundExhausted:
            if doublings >= settings.sb_max_doublings or bound >= cap:
                raise
            doublings += 1
            bound = min(2 * bound, cap)
            logger.info("raising standard basis bound to %d", bound)


def colength(sb: StandardBasis) -> Count:
    if sb.finite is False:
        return INFINITE
    if sb.finite is None:
        raise BoundExhausted("colength", sb.bound or 0)
    return len(standard_monomials(sb))


def standard_monomials(sb: StandardBasis) -> List[Monomial]:
    if not sb.finite:
        raise NotPrimary()
    d = sb.certificate_degree
    out = []
    for deg in range(d):
        for i in range(deg, -1, -1):
            m = (i, deg - i)
            if not sb.in_lead_ideal(m):
                out.append(m)
    return out


def membership(h: BivariatePolynomial, sb: StandardBasis) -> bool:
    if h.is_zero():
        return True
    if sb.finite:
        return not _top_reduce(sb.spec, h.terms, sb.elements, sb.certificate_degree)
    if sb.bound is None:
        return not _mora_normal_form(sb.spec, h.terms, sb.elements)
    raise BoundExhausted("membership", sb.bound)


def reduced_normal_form(h: BivariatePolynomial, sb: StandardBasis) -> BivariatePolynomial:
    """Remainder supported on standard monomials; linear in h"""
    if not sb.finite:
        raise NotPrimary()
    rem = _full_reduce(sb.spec, h.terms, sb.elements, sb.certificate_degree)
    return BivariatePolynomial(sb.spec, rem)


def primary_exponent(sb: StandardBasis) -> int:
    """Least l with M^l contained in the ideal"""
    if not sb.finite:
        raise NotPrimary()
    for d in range(sb.certificate_degree + 1):
        if _full_degree(sb.lead_ideal, d):
            return d
    return sb.certificate_degree


def ideal_colength(gens: Sequence[BivariatePolynomial]) -> Count:
    return colength(certified_basis(gens))


def ideal_power_generators(
    gens: Sequence[BivariatePolynomial], n: int, bound: Optional[int] = None
) -> List[BivariatePolynomial]:
    if n == 0:
        return [BivariatePolynomial.one(gens[0].spec)]
    out = []
    seen = set()
    for combo in combinations_with_replacement(range(len(gens)), n):
        prod = BivariatePolynomial.one(gens[0].spec)
        for k in combo:
            prod = prod.mul(gens[k], bound)
        if prod and prod not in seen:
            seen.add(prod)
            out.append(prod)
    return out


def hilbert_samuel_e0(gens: Sequence[BivariatePolynomial]) -> int:
    """Stabilized second difference of n -> colength(I^n)"""
    gens = [g for g in gens if g]
    base = certified_basis(gens)
    if not base.finite:
        raise NotPrimary()
    if any(g.is_unit() for g in gens):
        return 0
    l_i = primary_exponent(base)
    values = [0, colength(base)]
    needed = settings.hs_stable_differences
    seconds: List[int] = []
    for n in range(2, settings.hs_max_power + 1):
        sb = standard_basis(ideal_power_generators(gens, n, n * l_i + 1), n * l_i + 1)
        values.append(colength(sb))
        seconds.append(values[n] - 2 * values[n - 1] + values[n - 2])
        logger.debug("colength of power %d: %d", n, values[n])
        if len(seconds) >= needed and len(set(seconds[-needed:])) == 1:
            return seconds[-1]
    raise BoundExhausted("Hilbert-Samuel multiplicity", settings.hs_max_power)


def macaulay_colength(gens: Sequence[BivariatePolynomial], degree: int) -> int:
    """dim k[X,Y]/(I + M^degree) by linear algebra on monomial multiples"""
    gens = [g for g in gens if g]
    spec = gens[0].spec
    monomials = [(i, d - i) for d in range(degree) for i in range(d, -1, -1)]
    index = {m: k for k, m in enumerate(monomials)}
    rows = []
    for g in gens:
        order = g.order()
        for d in range(degree - order):
            for a in range(d + 1):
                shifted = g.shift(a, d - a).truncate(degree)
                if shifted:
                    row = [spec.zero] * len(monomials)
                    for m, c in shifted.terms.items():
                        row[index[m]] = c
                    rows.append(row)
    return len(monomials) - rank(spec, rows)


def general_element_e0(
    gens: Sequence[BivariatePolynomial],
    trials: Optional[int] = None,
    seed: Optional[int] = None,
) -> int:
    """min over random pairs of combinations of the colength of the pair"""
    gens = [g for g in gens if g]
    spec = gens[0].spec
    rng = random.Random(settings.general_element_seed if seed is None else seed)
    best = None
    for _ in range(trials or settings.general_element_trials):
        pair = []
        for _ in range(2):
            combo = BivariatePolynomial.zero(spec)
            for g in gens:
                combo = combo + g.scale(spec.random_element(rng))
            pair.append(combo)
        if any(not h for h in pair):
            continue
        value = ideal_colength(pair)
        if is_infinite(value):
            continue
        best = value if best is None else min(best, value)
    if best is None:
        raise BoundExhausted("general element multiplicity", trials or settings.general_element_trials)
    return best


def jacobian_ideal(f: BivariatePolynomial) -> List[BivariatePolynomial]:
    return [f.derivative("X"), f.derivative("Y")]


def tjurina_ideal(f: BivariatePolynomial) -> List[BivariatePolynomial]:
    return [f, f.derivative("X"), f.derivative("Y")]


def mu_stability(f: BivariatePolynomial, lmax: Optional[int] = None) -> MuStability:
    """Least l <= lmax with f^l in M T(f)^l"""
    lmax = lmax or settings.lmax
    spec = f.spec
    if f.order() is not None and f.order() <= 1:
        return MuStability(1, lmax)
    tjurina = [g for g in tjurina_ideal(f) if g]
    sb_t = certified_basis(tjurina)
    if not sb_t.finite:
        raise NotIsolated()
    l_t = primary_exponent(sb_t)
    x = BivariatePolynomial.x(spec)
    y = BivariatePolynomial.y(spec)
    for l in range(1, lmax + 1):
        bound = l * l_t + 2
        power = ideal_power_generators(tjurina, l, bound)
        gens = [g.mul(x, bound) for g in power] + [g.mul(y, bound) for g in power]
        sb = standard_basis([g for g in gens if g], bound)
        target = f.pow(l, bound)
        if not _top_reduce(spec, target.terms, sb.elements, bound):
            logger.info("f^%d lies in M T(f)^%d", l, l)
            return MuStability(l, lmax)
    return MuStability(None, lmax)


def unit_probe(f: BivariatePolynomial, units: Sequence[BivariatePolynomial]) -> List[Tuple[BivariatePolynomial, Count]]:
    """Milnor numbers of unit multiples u*f"""
    out = []
    for u in units:
        g = u * f
        out.append((u, ideal_colength(jacobian_ideal(g))))
    return out
