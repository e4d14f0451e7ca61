"""Approximate roots and the elements q_s of the Jacobian ideal.

For a tame branch f with semigroup <v_0, ..., v_g> the engine builds, for
every s in S(f) \\ {0}, a Y-polynomial q_s of Y-degree below v_0 lying in
J(f) = (f_X, f_Y) with I(f, q_s) = s + c - 1.  Every q_s is carried with its
expansion sum(alpha_i P_i [f, f_j_i]) over the approximate roots
f_-1 = X, f_0, ..., f_(g-1), where [a, b] = a_X b_Y - a_Y b_X.

The level-k curve is f_k for k < g and f itself at level g; its semigroup is
<v_0/e_k, ..., v_k/e_k>.  The possibly infinite degree-reduction loop stops
once the running remainder has intersection number above
primary_exponent(J) * v_0 + a_(n-1); such a remainder lies in J.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from planebranch.kernel.algebra import BivariatePolynomial, YPolynomial, y_poly_divide
from planebranch.kernel.branch import Branch
from planebranch.kernel.linalg import rank, solve
from planebranch.kernel.localideal import (
    StandardBasis,
    certified_basis,
    colength,
    jacobian_ideal,
    membership,
    primary_exponent,
    reduced_normal_form,
    standard_monomials,
)
from planebranch.kernel.semigroup import ValueSemigroup, semigroup_of
from planebranch.kernel.values import INFINITE, Count
from planebranch.utils.errors import (
    CharacteristicDividesIndex,
    HypothesisViolated,
    InvalidInput,
    NotInSemigroup,
    NotTame,
    TowerInvariantViolated,
)

logger = logging.getLogger(__name__)

PolyLike = Union[BivariatePolynomial, YPolynomial]


def _poly(h: PolyLike) -> BivariatePolynomial:
    return h.poly if isinstance(h, YPolynomial) else h


def bracket(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    """[a, b] = a_X b_Y - a_Y b_X"""
    return a.derivative("X") * b.derivative("Y") - a.derivative("Y") * b.derivative("X")


def adic_expansion(h: BivariatePolynomial, root: BivariatePolynomial) -> List[BivariatePolynomial]:
    """Digits d_i with h = sum d_i root^i and deg_Y d_i < deg_Y root; root monic in Y"""
    if not root.is_monic_in_y():
        raise InvalidInput("expansion base must be monic in Y", {"root": root.to_str()})
    digits: List[BivariatePolynomial] = []
    rest = h
    divisor = YPolynomial(root)
    while not rest.is_zero():
        q, r = y_poly_divide(YPolynomial(rest), divisor)
        digits.append(r.poly)
        rest = q.poly
    return digits


def approximate_root(F: PolyLike, d: int) -> BivariatePolynomial:
    """The monic G of Y-degree deg(F)/d with deg_Y(F - G^d) < deg(F) - deg(F)/d"""
    F = _poly(F)
    spec = F.spec
    if d == 1:
        return F
    if not F.is_monic_in_y():
        raise InvalidInput("approximate roots need a monic polynomial", {"polynomial": F.to_str()})
    big_n = F.y_degree()
    if big_n % d:
        raise InvalidInput("d must divide the degree", {"degree": big_n, "d": d})
    p = spec.characteristic
    if p and d % p == 0:
        raise CharacteristicDividesIndex(d, p)
    m = big_n // d
    inverse_d = spec.inv(spec.from_int(d))
    root = BivariatePolynomial.monomial(spec, 0, m)
    for _ in range(m + 2):
        digits = adic_expansion(F, root)
        digits += [BivariatePolynomial.zero(spec)] * (d + 1 - len(digits))
        correction = digits[d - 1]
        if correction.is_zero():
            defect = F - root.pow(d)
            if not defect.is_zero() and defect.y_degree() >= big_n - m:
                raise HypothesisViolated("approximate root defect degree", {"d": d})
            return root
        root = root + correction.scale(inverse_d)
    raise HypothesisViolated("Tschirnhausen iteration converges", {"d": d})


@dataclass
class RootTower:
    """f with its approximate roots f_-1 = X, f_0, ..., f_(g-1)"""

    f: BivariatePolynomial
    semigroup: ValueSemigroup
    roots: List[BivariatePolynomial]
    remainders: List[BivariatePolynomial]
    values: List[int]
    _engine: Optional["QsEngine"] = field(default=None, repr=False)

    @property
    def spec(self):
        return self.f.spec

    @property
    def genus(self) -> int:
        return self.semigroup.genus

    def root(self, j: int) -> BivariatePolynomial:
        return self.roots[j + 1]

    def curve(self, k: int) -> BivariatePolynomial:
        """f_k for k < g and f at level g"""
        return self.f if k == self.genus else self.root(k)

    def level_semigroup(self, k: int) -> ValueSemigroup:
        e_k = self.semigroup.e[k]
        return ValueSemigroup(tuple(v // e_k for v in self.semigroup.generators[: k + 1]))

    @property
    def engine(self) -> "QsEngine":
        if self._engine is None:
            self._engine = QsEngine(self)
        return self._engine


def build_tower(f: PolyLike, semigroup: Optional[ValueSemigroup] = None) -> RootTower:
    f = _poly(f)
    spec = f.spec
    if not f.is_monic_in_y():
        raise InvalidInput("the tower needs a monic Weierstrass polynomial", {"polynomial": f.to_str()})
    branch = Branch(f)
    S = semigroup or semigroup_of(branch)
    if f.y_degree() != S.multiplicity:
        raise InvalidInput("deg_Y f must equal v_0", {"degree": f.y_degree(), "v0": S.multiplicity})
    x = BivariatePolynomial.x(spec)
    roots = [x]
    values = [branch.valuation(x)]
    if values[0] != S.generators[0]:
        raise TowerInvariantViolated(-1, S.generators[0], values[0])
    for j in range(S.genus):
        root = approximate_root(f, S.e[j])
        found = branch.valuation(root)
        if found != S.generators[j + 1]:
            raise TowerInvariantViolated(j, S.generators[j + 1], found)
        if j > 0:
            expected = tuple(v // S.e[j] for v in S.generators[: j + 1])
            own = semigroup_of(Branch(root)).generators
            if own != expected:
                raise TowerInvariantViolated(j, list(expected), list(own))
        roots.append(root)
        values.append(found)
    remainders = []
    for j in range(1, S.genus + 1):
        upper = f if j == S.genus else roots[j + 1]
        lower = roots[j]
        remainder = lower.pow(S.n[j]) - upper
        if not remainder.is_zero() and remainder.y_degree() >= (S.n[j] - 1) * lower.y_degree():
            raise TowerInvariantViolated(j, f"deg_Y < {(S.n[j] - 1) * lower.y_degree()}", remainder.y_degree())
        remainders.append(remainder)
    logger.info("tower of %s: %s", f.to_str(), [r.to_str() for r in roots])
    return RootTower(f, S, roots, remainders, values)


@dataclass(frozen=True)
class ExpansionTerm:
    """coefficient * prod root_i^exponents[i+1] * [curve, root_bracket]"""

    coefficient: Any
    exponents: Tuple[int, ...]
    bracket: int


@dataclass
class QsElement:
    s: int
    level: int
    value: BivariatePolynomial
    terms: List[ExpansionTerm]
    trace: Dict[str, Any] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.value.y_degree() if not self.value.is_zero() else -1


@dataclass
class Reduction:
    value: BivariatePolynomial
    terms: List[ExpansionTerm]
    log: List[Tuple[Any, int]]
    tail_order: Optional[Count]
    threshold: Optional[int]


class _Level:
    def __init__(self, tower: RootTower, k: int):
        self.k = k
        self.curve = tower.curve(k)
        self.semigroup = tower.level_semigroup(k)
        self.conductor = self.semigroup.conductor

    @cached_property
    def branch(self) -> Branch:
        return Branch(self.curve)

    @cached_property
    def jacobian_basis(self) -> StandardBasis:
        return certified_basis(jacobian_ideal(self.curve))

    @cached_property
    def threshold(self) -> int:
        return membership_threshold(self.jacobian_basis, self.semigroup)

    def intersection(self, h: BivariatePolynomial) -> Count:
        return self.branch.valuation(h)


class QsEngine:
    """Memoized construction of q_s, tilde q_t and degree reductions at every level"""

    def __init__(self, tower: RootTower):
        self.tower = tower
        self.spec = tower.spec
        self.width = tower.genus + 1
        self.levels = [_Level(tower, k) for k in range(tower.genus + 1)]
        self._q: Dict[Tuple[int, int], QsElement] = {}
        self._tilde: Dict[Tuple[int, int], QsElement] = {}
        self._brackets: Dict[Tuple[int, int], BivariatePolynomial] = {}
        self._powers: Dict[Tuple[int, int], BivariatePolynomial] = {}

    def _root_power(self, j: int, e: int) -> BivariatePolynomial:
        key = (j, e)
        if key not in self._powers:
            self._powers[key] = self.tower.root(j).pow(e)
        return self._powers[key]

    def monomial(self, exponents: Sequence[int]) -> BivariatePolynomial:
        result = BivariatePolynomial.one(self.spec)
        for idx, e in enumerate(exponents):
            if e:
                result = result * self._root_power(idx - 1, e)
        return result

    def _bracket(self, k: int, j: int) -> BivariatePolynomial:
        key = (k, j)
        if key not in self._brackets:
            self._brackets[key] = bracket(self.levels[k].curve, self.tower.root(j))
        return self._brackets[key]

    def realize(self, k: int, terms: Sequence[ExpansionTerm]) -> BivariatePolynomial:
        total = BivariatePolynomial.zero(self.spec)
        for term in terms:
            piece = self.monomial(term.exponents) * self._bracket(k, term.bracket)
            total = total + piece.scale(term.coefficient)
        return total

    def _unit_exponents(self, j: int, power: int = 1) -> Tuple[int, ...]:
        exps = [0] * self.width
        exps[j + 1] = power
        return tuple(exps)

    @staticmethod
    def _shift_terms(terms: Sequence[ExpansionTerm], exponents: Sequence[int]) -> List[ExpansionTerm]:
        return [
            ExpansionTerm(t.coefficient, tuple(a + b for a, b in zip(t.exponents, exponents)), t.bracket)
            for t in terms
        ]

    def decompose(self, k: int, s: int) -> Tuple[int, int]:
        """s = n_k t + w v with t in S(f_(k-1)) and 0 <= w < n_k"""
        S = self.levels[k].semigroup
        v = S.generators[k]
        n_k = S.n[k]
        w = (s * pow(v % n_k, -1, n_k)) % n_k
        rest = s - w * v
        if rest < 0 or rest % n_k:
            raise NotInSemigroup(s, list(S.generators))
        t = rest // n_k
        if not self.levels[k - 1].semigroup.contains(t):
            raise NotInSemigroup(s, list(S.generators))
        return t, w

    def q_element(self, k: int, s: int) -> QsElement:
        key = (k, s)
        if key in self._q:
            return self._q[key]
        level = self.levels[k]
        if s <= 0 or not level.semigroup.contains(s):
            raise NotInSemigroup(s, list(level.semigroup.generators))
        if k == 0:
            exps = self._unit_exponents(-1, s - 1)
            terms = [ExpansionTerm(self.spec.one, exps, -1)]
            element = QsElement(s, 0, self.realize(0, terms), terms, {"case": "base"})
        else:
            t, w = self.decompose(k, s)
            if w == 0:
                tilde = self.tilde_q(k, t)
                element = QsElement(s, k, tilde.value, list(tilde.terms), {"case": "tilde", "t": t})
            elif t == 0:
                element = self._pure_power_case(k, w)
            else:
                element = self._mixed_case(k, t, w)
        self._q[key] = element
        logger.debug("q at level %d for s=%d: %s", k, s, element.trace.get("case"))
        return element

    def tilde_q(self, k: int, t: int) -> QsElement:
        """sum P_i [f_k, f_j_i] from q at level k-1; I(f_k, .) = c_k - 1 + n_k t"""
        key = (k, t)
        if key in self._tilde:
            return self._tilde[key]
        lower = self.q_element(k - 1, t)
        terms = list(lower.terms)
        element = QsElement(t, k, self.realize(k, terms), terms, {"case": "tilde", "t": t})
        self._tilde[key] = element
        return element

    def _pure_power_case(self, k: int, w: int) -> QsElement:
        v = self.levels[k].semigroup.generators[k]
        if w == 1:
            terms = [ExpansionTerm(self.spec.one, tuple([0] * self.width), k - 1)]
            return QsElement(v, k, self._bracket(k, k - 1), terms, {"case": "bracket"})
        previous = self.q_element(k, (w - 1) * v)
        reduced = self.degree_reduce(k, previous.value, previous.terms, (w - 1) * v)
        shift = self._unit_exponents(k - 1)
        value = reduced.value * self.tower.root(k - 1)
        terms = self._shift_terms(reduced.terms, shift)
        trace = {"case": "power", "w": w, "log": reduced.log, "threshold": reduced.threshold, "tail": reduced.tail_order}
        return QsElement(w * v, k, value, terms, trace)

    def _mixed_case(self, k: int, t: int, w: int) -> QsElement:
        S = self.levels[k].semigroup
        v = S.generators[k]
        s = S.n[k] * t + w * v
        power = self.q_element(k, w * v)
        reduced = self.degree_reduce(k, power.value, power.terms, w * v)
        lead = self.q_element(k - 1, t).terms[0]
        factor = list(lead.exponents)
        factor[lead.bracket + 1] += 1
        multiplier = self.monomial(factor)
        value = reduced.value * multiplier
        terms = self._shift_terms(reduced.terms, factor)
        trace = {
            "case": "mixed",
            "t": t,
            "w": w,
            "log": reduced.log,
            "threshold": reduced.threshold,
            "tail": reduced.tail_order,
        }
        return QsElement(s, k, value, terms, trace)

    def _leading_ratio(self, k: int, target: BivariatePolynomial, against: BivariatePolynomial) -> Any:
        branch = self.levels[k].branch
        o_t, c_t = branch.leading_term(target)
        o_a, c_a = branch.leading_term(against)
        if o_t != o_a:
            raise HypothesisViolated("equal intersection numbers", {"level": k, "target": o_t, "against": o_a})
        return self.spec.div(c_t, c_a)

    def degree_reduce(
        self, k: int, h: BivariatePolynomial, terms: Sequence[ExpansionTerm], m: int
    ) -> Reduction:
        """h' with I(f_k, h') = I(f_k, h), deg_Y h' < deg f_k - deg f_(k-1) and h - h' a sum of tilde q"""
        level = self.levels[k]
        lower = self.levels[k - 1]
        n_k = level.semigroup.n[k]
        if m % n_k == 0:
            raise HypothesisViolated("n_k does not divide m", {"m": m, "n": n_k})
        c1 = level.conductor - 1
        divisor = YPolynomial(self.tower.root(k - 1).pow(n_k - 1))
        threshold = level.threshold
        current = h
        primes = BivariatePolynomial.zero(self.spec)
        new_terms = list(terms)
        log: List[Tuple[Any, int]] = []
        tail_order: Optional[Count] = None
        while not current.is_zero():
            value = level.intersection(current)
            if value is INFINITE or value > threshold:
                tail_order = value
                break
            excess = value - c1
            if excess % n_k:
                quotient, remainder = y_poly_divide(YPolynomial(current), divisor)
                if quotient.poly.is_zero():
                    primes = primes + current
                    current = BivariatePolynomial.zero(self.spec)
                    break
                primes = primes + remainder.poly
                target = current - remainder.poly
                u = lower.intersection(quotient.poly) - lower.conductor + 1
            else:
                target = current
                u = excess // n_k
            tilde = self.tilde_q(k, u)
            alpha = self._leading_ratio(k, target, tilde.value)
            current = target - tilde.value.scale(alpha)
            new_terms.extend(
                ExpansionTerm(self.spec.neg(self.spec.mul(alpha, t.coefficient)), t.exponents, t.bracket)
                for t in tilde.terms
            )
            log.append((alpha, u))
        return Reduction(primes, new_terms, log, tail_order, threshold)


def membership_threshold(sb: StandardBasis, semigroup: ValueSemigroup) -> int:
    """Above this intersection number a Y-polynomial of degree < v_0 lies in the ideal"""
    return primary_exponent(sb) * semigroup.multiplicity + max(semigroup.apery_set())


def _require_tame(tower: RootTower) -> None:
    p = tower.spec.characteristic
    if not tower.semigroup.is_tame(p):
        raise NotTame(list(tower.semigroup.generators), p)


def q_element(tower: RootTower, s: int) -> QsElement:
    _require_tame(tower)
    return tower.engine.q_element(tower.genus, s)


def tilde_q(tower: RootTower, t: int) -> QsElement:
    _require_tame(tower)
    if tower.genus == 0:
        raise InvalidInput("tilde q needs genus at least one")
    return tower.engine.tilde_q(tower.genus, t)


def degree_reduce(tower: RootTower, h: PolyLike, m: int) -> Reduction:
    _require_tame(tower)
    poly = _poly(h)
    return tower.engine.degree_reduce(tower.genus, poly, [], m)


@dataclass
class VModuleDecomposition:
    coefficients: Dict[Tuple[int, ...], BivariatePolynomial]
    quotient: BivariatePolynomial
    remainder: BivariatePolynomial


def _expand_in_roots(tower: RootTower, h: BivariatePolynomial, top: int) -> Dict[Tuple[int, ...], BivariatePolynomial]:
    if top < 0:
        if h.y_degree() > 0:
            raise InvalidInput("coefficient still depends on Y", {"h": h.to_str()})
        return {(): h}
    result: Dict[Tuple[int, ...], BivariatePolynomial] = {}
    for j, digit in enumerate(adic_expansion(h, tower.root(top))):
        for key, coeff in _expand_in_roots(tower, digit, top - 1).items():
            if not coeff.is_zero():
                result[key + (j,)] = coeff
    return result


def vmodule_decompose(h: PolyLike, tower: RootTower) -> VModuleDecomposition:
    """h = sum a_J(X) f_0^j_0 ... f_(g-1)^j_(g-1) and the split h = f_(g-1)^(n_g - 1) h'' + h'"""
    poly = _poly(h)
    v0 = tower.semigroup.multiplicity
    if not poly.is_zero() and poly.y_degree() >= v0:
        raise InvalidInput("deg_Y h must be below v_0", {"degree": poly.y_degree(), "v0": v0})
    g = tower.genus
    coefficients = _expand_in_roots(tower, poly, g - 1)
    if g == 0:
        return VModuleDecomposition(coefficients, BivariatePolynomial.zero(poly.spec), poly)
    n_g = tower.semigroup.n[g]
    quotient, remainder = y_poly_divide(YPolynomial(poly), YPolynomial(tower.root(g - 1).pow(n_g - 1)))
    return VModuleDecomposition(coefficients, quotient.poly, remainder.poly)


def recompose(tower: RootTower, coefficients: Dict[Tuple[int, ...], BivariatePolynomial]) -> BivariatePolynomial:
    total = BivariatePolynomial.zero(tower.spec)
    for key, coeff in coefficients.items():
        piece = coeff
        for j, e in enumerate(key):
            if e:
                piece = piece * tower.root(j).pow(e)
        total = total + piece
    return total


def key_family(tower: RootTower) -> List[Tuple[int, BivariatePolynomial]]:
    """(alpha, X^x_0 prod f_(i-1)^x_i) for alpha in S minus (S + c - 1)"""
    S = tower.semigroup
    spec = tower.spec
    family = []
    for alpha in S.sweep_set():
        rep = S.canonical_representation(alpha)
        if rep is None:
            raise NotInSemigroup(alpha, list(S.generators))
        realizer = BivariatePolynomial.monomial(spec, rep[0], 0)
        for i in range(1, len(rep)):
            if rep[i]:
                realizer = realizer * tower.root(i - 1).pow(rep[i])
        family.append((alpha, realizer))
    return family


@dataclass
class QRow:
    s: int
    intersection: Count
    expected: int
    degree: int
    member: bool
    degree_bound: int

    @property
    def passed(self) -> bool:
        return self.intersection == self.expected and self.member and self.degree < self.degree_bound


@dataclass
class KeyTheoremVerdict:
    mu: Count
    conductor: int
    rank: int
    rows: List[QRow]
    threshold: int

    @property
    def mu_equals_conductor(self) -> bool:
        return self.mu == self.conductor

    @property
    def rank_ok(self) -> bool:
        return self.rank == self.conductor

    @property
    def passed(self) -> bool:
        return self.mu_equals_conductor and self.rank_ok and all(r.passed for r in self.rows)

    def failures(self) -> List[str]:
        out = []
        if not self.mu_equals_conductor:
            out.append(f"mu={self.mu} differs from c={self.conductor}")
        if not self.rank_ok:
            out.append(f"key family rank {self.rank} differs from c={self.conductor}")
        out.extend(f"q_{r.s}: I={r.intersection} expected {r.expected}, member={r.member}" for r in self.rows if not r.passed)
        return out


def _coordinates(h: BivariatePolynomial, sb: StandardBasis, monomials: Sequence[Tuple[int, int]]) -> List[Any]:
    nf = reduced_normal_form(h, sb)
    return [nf.coefficient(i, j) for (i, j) in monomials]


def verify_key_theorem(tower: RootTower, s_values: Optional[Sequence[int]] = None) -> KeyTheoremVerdict:
    _require_tame(tower)
    f = tower.f
    spec = tower.spec
    S = tower.semigroup
    c = S.conductor
    sb = tower.engine.levels[tower.genus].jacobian_basis
    mu = colength(sb)
    monomials = standard_monomials(sb) if sb.finite else []
    family = key_family(tower)
    rows_matrix = [_coordinates(realizer, sb, monomials) for _, realizer in family] if monomials else []
    family_rank = rank(spec, rows_matrix) if rows_matrix else 0
    if s_values is None:
        s_values = [s for s in range(1, c + S.multiplicity) if S.contains(s)]
    rows = []
    for s in s_values:
        element = q_element(tower, s)
        value = tower.engine.levels[tower.genus].intersection(element.value)
        rows.append(QRow(s, value, s + c - 1, element.degree, membership(element.value, sb), S.multiplicity))
    verdict = KeyTheoremVerdict(mu, c, family_rank, rows, tower.engine.levels[tower.genus].threshold)
    logger.info("key theorem on %s: mu=%s c=%d rank=%d", f.to_str(), mu, c, family_rank)
    return verdict


def key_decompose(h: PolyLike, tower: RootTower) -> List[Any]:
    """alpha with h - sum alpha_i phi_i in J(f) over the key family"""
    _require_tame(tower)
    sb = tower.engine.levels[tower.genus].jacobian_basis
    monomials = standard_monomials(sb)
    columns = [_coordinates(realizer, sb, monomials) for _, realizer in key_family(tower)]
    target = _coordinates(_poly(h), sb, monomials)
    solution = solve(tower.spec, columns, target)
    if solution is None:
        raise HypothesisViolated("key family spans the quotient by J(f)", {"h": _poly(h).to_str()})
    return solution


def check_bracket_inequality(tower: RootTower) -> List[Dict[str, Any]]:
    """I(f, [f, f_(j-1)]) >= v_j + c - 1, equality iff p does not divide v_j"""
    S = tower.semigroup
    p = tower.spec.characteristic
    branch = Branch(tower.f)
    c = S.conductor
    rows = []
    for j in range(S.genus + 1):
        value = branch.valuation(bracket(tower.f, tower.root(j - 1)))
        bound = S.generators[j] + c - 1
        expect_equal = p == 0 or S.generators[j] % p != 0
        holds = value >= bound and (value == bound) == expect_equal
        rows.append({"j": j, "v": S.generators[j], "value": value, "bound": bound, "equality_expected": expect_equal, "holds": holds})
    return rows


def split_value_identity(tower: RootTower, h: PolyLike) -> Tuple[Count, Count]:
    """(I(f, h''), n_g I(f_(g-1), h'')) for the split of h"""
    split = vmodule_decompose(h, tower)
    g = tower.genus
    if split.quotient.is_zero():
        return INFINITE, INFINITE
    upper = tower.engine.levels[g].intersection(split.quotient)
    lower = tower.engine.levels[g - 1].intersection(split.quotient)
    return upper, tower.semigroup.n[g] * lower


__all__ = [
    "ExpansionTerm",
    "KeyTheoremVerdict",
    "QRow",
    "QsElement",
    "QsEngine",
    "RootTower",
    "adic_expansion",
    "approximate_root",
    "bracket",
    "build_tower",
    "check_bracket_inequality",
    "degree_reduce",
    "key_decompose",
    "key_family",
    "membership_threshold",
    "q_element",
    "recompose",
    "split_value_identity",
    "tilde_q",
    "verify_key_theorem",
    "vmodule_decompose",
]
