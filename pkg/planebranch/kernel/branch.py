"""Parametrization of plane branches by successive blowups.

Every stage works on an exact polynomial F(a, b) with F(0, 0) = 0:

1. read the tangent cone; it must be c*L^m for a single line L,
2. move L to b = 0 (swap a and b if L is a = 0, then b -> b + theta*a),
3. blow up with b = a*b1 and divide by a^m.

Once the strict transform is smooth the branch is solved for b = phi(a)
(or a = psi(b)) by Newton iteration and the series are pushed back through
the recorded steps.
"""

import logging
import random
from dataclasses import dataclass
from math import comb, gcd
from typing import Any, Dict, List, Optional, Tuple

from planebranch.config import settings
from planebranch.kernel.algebra import BivariatePolynomial, UniSeries
from planebranch.kernel.field import FieldSpec
from planebranch.kernel.values import INFINITE, Count
from planebranch.utils.errors import (
    InvalidInput,
    NotReduced,
    PrecisionExhausted,
    Reducible,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TangentData:
    """Tangent cone c*L^m; line is None when the cone splits into several lines"""

    multiplicity: int
    line: Optional[BivariatePolynomial]
    theta: Any = None
    vertical: bool = False

    @property
    def is_split(self) -> bool:
        return self.line is None


@dataclass(frozen=True)
class BlowupStep:
    multiplicity: int
    theta: Any
    swap: bool


@dataclass
class BlowupChain:
    spec: FieldSpec
    equation: BivariatePolynomial
    steps: List[BlowupStep]
    terminal: BivariatePolynomial
    terminal_contact: int

    @property
    def multiplicity(self) -> int:
        return self.steps[0].multiplicity if self.steps else 1


@dataclass
class Parametrization:
    x: UniSeries
    y: UniSeries
    precision: int
    chain: BlowupChain

    @property
    def spec(self) -> FieldSpec:
        return self.x.spec

    @property
    def transversal(self) -> str:
        """The coordinate whose order equals the multiplicity"""
        ox, oy = self.x.order(), self.y.order()
        if oy is None or (ox is not None and ox <= oy):
            return "X"
        return "Y"

    def order_pair(self) -> Tuple[Optional[int], Optional[int]]:
        return self.x.order(), self.y.order()


def _p_adic_valuation(n: int, p: int) -> int:
    if p == 0:
        return 0
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def tangent_data(f: BivariatePolynomial) -> TangentData:
    """Multiplicity and tangent line of f, or a split cone"""
    spec = f.spec
    m = f.order()
    if m is None or m == 0:
        raise InvalidInput("tangent data needs a nonzero polynomial vanishing at the origin")
    cone = f.homogeneous_part(m)
    # c_k is the coefficient of a^(m-k) b^k
    coeffs = {j: c for (i, j), c in cone.terms.items()}
    x = BivariatePolynomial.x(spec)
    y = BivariatePolynomial.y(spec)
    lead = coeffs.get(m)
    if not lead:
        if set(coeffs) == {0}:
            return TangentData(m, x, None, vertical=True)
        return TangentData(m, None)
    p = spec.characteristic
    e = _p_adic_valuation(m, p)
    q = p**e if p else 1
    if any(k % q for k in coeffs):
        return TangentData(m, None)
    m_free = m // q
    # c (B - gamma A)^m_free with A = a^q, B = b^q
    below = coeffs.get(m - q, spec.zero)
    gamma = spec.neg(spec.div(below, spec.mul(lead, spec.from_int(m_free))))
    for k_free in range(m_free + 1):
        expected = spec.mul(
            spec.mul(lead, spec.from_int(comb(m_free, k_free))),
            spec.pow(spec.neg(gamma), m_free - k_free),
        )
        if expected != coeffs.get(k_free * q, spec.zero):
            return TangentData(m, None)
    theta = gamma
    for _ in range(e):
        theta = spec.frobenius_root(theta)
    return TangentData(m, y - x.scale(theta), theta)


def _blowup(h: BivariatePolynomial, m: int) -> BivariatePolynomial:
    """H(a, a*b1) / a^m"""
    return BivariatePolynomial(h.spec, {(i + j - m, j): c for (i, j), c in h.terms.items()})


def _check_unibranch(h: BivariatePolynomial, m: int, stage: int) -> None:
    """After moving the tangent to b = 0, reject b | H with H of multiplicity >= 2"""
    if m < 2 or any(j == 0 for _, j in h.terms):
        return
    quotient = BivariatePolynomial(h.spec, {(i, j - 1): c for (i, j), c in h.terms.items()})
    if quotient.is_unit():
        return
    if all(j >= 1 for _, j in quotient.terms):
        raise NotReduced(stage)
    raise Reducible(stage, m)


def blowup_chain(f: BivariatePolynomial) -> BlowupChain:
    spec = f.spec
    if f.is_zero():
        raise InvalidInput("the zero polynomial is not a branch")
    if f.is_unit():
        raise InvalidInput("the polynomial does not vanish at the origin")
    steps: List[BlowupStep] = []
    current = f
    stage = 0
    while True:
        m = current.order()
        if m == 1:
            break
        if len(steps) >= settings.max_blowups:
            raise NotReduced(stage)
        tangent = tangent_data(current)
        if tangent.is_split:
            raise Reducible(stage, m)
        swap = tangent.vertical
        theta = spec.zero if swap else tangent.theta
        working = current.swap() if swap else current
        if theta:
            a = BivariatePolynomial.x(spec)
            b = BivariatePolynomial.y(spec)
            working = working.compose(a, b + a.scale(theta))
        _check_unibranch(working, m, stage)
        logger.debug("stage %d: multiplicity %d, theta %s, swap %s", stage, m, spec.to_str(theta), swap)
        steps.append(BlowupStep(m, theta, swap))
        current = _blowup(working, m)
        stage += 1
    contact = _contact_with_exceptional(current, bool(steps))
    return BlowupChain(spec, f, steps, current, contact)


def _contact_with_exceptional(terminal: BivariatePolynomial, blown_up: bool) -> int:
    """Intersection of the smooth strict transform with the last exceptional divisor a = 0"""
    if not blown_up:
        return 1
    on_divisor = [j for (i, j) in terminal.terms if i == 0]
    if not on_divisor:
        raise InvalidInput("strict transform contains the exceptional divisor")
    return min(on_divisor)


def multiplicity_sequence(chain: BlowupChain) -> List[int]:
    """Multiplicities of the infinitely near points up to the last satellite point"""
    if not chain.steps:
        return [1]
    return [s.multiplicity for s in chain.steps] + [1] * chain.terminal_contact


def _solve_smooth(terminal: BivariatePolynomial, precision: int) -> Tuple[UniSeries, UniSeries]:
    """A parameter t on the smooth germ terminal = 0: (a(t), b(t))"""
    spec = terminal.spec
    c_b = terminal.coefficient(0, 1)
    t = UniSeries.monomial(spec, 1, precision)
    if c_b:
        phi = _newton(terminal, t, precision, solve_for_b=True)
        return t, phi
    psi = _newton(terminal, t, precision, solve_for_b=False)
    return psi, t


def _newton(g: BivariatePolynomial, t: UniSeries, precision: int, solve_for_b: bool) -> UniSeries:
    spec = g.spec
    var = "Y" if solve_for_b else "X"
    dg = g.derivative(var)
    sol = UniSeries.zero(spec, 1)
    prec = 1
    while prec < precision:
        prec = min(2 * prec, precision)
        sol = UniSeries(spec, sol.coeffs, prec)
        tt = t.truncate(prec)
        if solve_for_b:
            value = g.evaluate(tt, sol, prec)
            slope = dg.evaluate(tt, sol, prec)
        else:
            value = g.evaluate(sol, tt, prec)
            slope = dg.evaluate(sol, tt, prec)
        sol = (sol - value * slope.inverse()).truncate(prec)
        sol = UniSeries(spec, sol.coeffs, prec)
    return sol


def parametrize(chain: BlowupChain, precision: int) -> Parametrization:
    spec = chain.spec
    a, b = _solve_smooth(chain.terminal, precision)
    for step in reversed(chain.steps):
        prev_a = a
        prev_b = a * b
        if step.theta:
            prev_b = prev_b + a.scale(step.theta)
        if step.swap:
            prev_a, prev_b = prev_b, prev_a
        a, b = prev_a, prev_b
    final = min(a.precision, b.precision)
    x, y = a.truncate(final), b.truncate(final)
    if final < precision:
        raise PrecisionExhausted("parametrization", final, precision)
    logger.debug("parametrization of %s to precision %d", chain.equation, final)
    return Parametrization(x, y, final, chain)


def default_precision(chain: BlowupChain) -> int:
    """4c plus slack once the conductor is known, capped by settings.default_precision"""
    seq = multiplicity_sequence(chain)
    delta = sum(m * (m - 1) // 2 for m in seq)
    return min(max(4 * 2 * delta + 2 * chain.multiplicity + 8, 16), settings.default_precision)


def hn_expand(f: BivariatePolynomial, target_precision: Optional[int] = None) -> Tuple[BlowupChain, Parametrization]:
    chain = blowup_chain(f)
    precision = target_precision or default_precision(chain)
    return chain, parametrize(chain, precision)


def is_irreducible(f: BivariatePolynomial) -> bool:
    """True iff f defines a single reduced branch at the origin"""
    if f.order() == 1:
        return True
    try:
        blowup_chain(f)
    except Reducible as exc:
        logger.info("reducible at stage %s", exc.stage)
        return False
    except NotReduced:
        logger.info("equation is not reduced")
        return False
    return True


def _composed(par: Parametrization, g: BivariatePolynomial) -> UniSeries:
    return g.evaluate(par.x, par.y, par.precision)


def _bezout(par: Parametrization, g: BivariatePolynomial) -> int:
    return max(par.chain.equation.degree(), 1) * max(g.degree(), 1)


class Branch:
    """A plane branch with a parametrization refined on demand"""

    def __init__(self, f: BivariatePolynomial, precision: Optional[int] = None, chain: Optional[BlowupChain] = None):
        self.equation = f
        self.spec = f.spec
        self.chain = chain or blowup_chain(f)
        self._par = parametrize(self.chain, precision or default_precision(self.chain))
        self._cache: Dict[BivariatePolynomial, Count] = {}

    @classmethod
    def from_parametrization(cls, par: Parametrization) -> "Branch":
        branch = cls.__new__(cls)
        branch.equation = par.chain.equation
        branch.spec = par.spec
        branch.chain = par.chain
        branch._par = par
        branch._cache = {}
        return branch

    @property
    def parametrization(self) -> Parametrization:
        return self._par

    @property
    def multiplicity(self) -> int:
        return self.chain.multiplicity

    def multiplicity_sequence(self) -> List[int]:
        return multiplicity_sequence(self.chain)

    def refine(self, precision: int) -> Parametrization:
        if precision > self._par.precision:
            logger.info("refining parametrization to precision %d", precision)
            self._par = parametrize(self.chain, precision)
        return self._par

    def _ladder(self, g: BivariatePolynomial):
        """Precisions to try: current, doublings, then the Bezout bound"""
        yield self._par
        for _ in range(settings.max_precision_doublings):
            yield self.refine(2 * self._par.precision)
        bound = _bezout(self._par, g) + 1
        if bound > self._par.precision:
            yield self.refine(bound)

    def valuation(self, g: BivariatePolynomial) -> Count:
        if g in self._cache:
            return self._cache[g]
        if g.is_zero():
            return INFINITE
        if g.is_unit():
            return 0
        last = None
        for par in self._ladder(g):
            series = _composed(par, g)
            order = series.order()
            if order is not None:
                self._cache[g] = order
                return order
            last = series.precision
            if series.precision > _bezout(par, g):
                self._cache[g] = INFINITE
                return INFINITE
        raise PrecisionExhausted("valuation", last or 0)

    def leading_term(self, g: BivariatePolynomial) -> Tuple[Count, Any]:
        """ord_t and leading coefficient of g(x(t), y(t))"""
        value = self.valuation(g)
        if value is INFINITE:
            return INFINITE, None
        return value, _composed(self._par, g).coeffs[value]

    def t_derivative_order(self, g: BivariatePolynomial) -> Count:
        if g.is_zero() or g.degree() == 0:
            return INFINITE
        for par in self._ladder(g):
            derivative = _composed(par, g).derivative()
            order = derivative.order()
            if order is not None:
                return order
        logger.info("d/dt of the composed series vanishes to precision %d", self._par.precision)
        return INFINITE

    def intersection_multiplicity(self, g: BivariatePolynomial) -> Count:
        return self.valuation(g)


def valuation(par: Parametrization, g: BivariatePolynomial) -> Count:
    """ord_t g(x(t), y(t)), refining the parametrization when it vanishes"""
    return Branch.from_parametrization(par).valuation(g)


def intersection_multiplicity(f: BivariatePolynomial, g: BivariatePolynomial) -> Count:
    return Branch(f).valuation(g)


def t_derivative_order(par: Parametrization, g: BivariatePolynomial) -> Count:
    return Branch.from_parametrization(par).t_derivative_order(g)


def check_parametrization(par: Parametrization) -> bool:
    """f(x(t), y(t)) vanishes to precision and min(ord x, ord y) is the multiplicity"""
    f = par.chain.equation
    residual = _composed(par, f)
    ox, oy = par.order_pair()
    orders = [o for o in (ox, oy) if o is not None]
    return residual.is_zero() and min(orders) == f.order()


def random_branch_equation(rng: random.Random, spec: FieldSpec, max_n: int = 5, max_m: int = 13) -> BivariatePolynomial:
    """Y^n - X^m with coprime n < m plus a few terms strictly above the Newton edge.

    The edge has no interior lattice point, so the result is a branch with
    semigroup <n, m> in every characteristic.
    """
    n = rng.randint(2, max_n)
    m = rng.randint(n + 1, max_m)
    while gcd(n, m) != 1:
        m += 1
    terms = {(0, n): spec.one, (m, 0): spec.neg(spec.one)}
    coefficient_range = spec.characteristic - 1 if spec.characteristic else 5
    for _ in range(rng.randint(0, 3)):
        j = rng.randint(0, n + 1)
        # least i with i n + j m > n m
        i = max((n - j) * m // n + 1, 0) + rng.randint(0, 2)
        if (i, j) in terms:
            continue
        terms[(i, j)] = spec.from_int(rng.randint(1, coefficient_range))
    return BivariatePolynomial(spec, terms)


__all__ = [
    "Branch",
    "BlowupChain",
    "BlowupStep",
    "Parametrization",
    "TangentData",
    "blowup_chain",
    "check_parametrization",
    "hn_expand",
    "intersection_multiplicity",
    "is_irreducible",
    "multiplicity_sequence",
    "parametrize",
    "random_branch_equation",
    "t_derivative_order",
    "tangent_data",
    "valuation",
]
