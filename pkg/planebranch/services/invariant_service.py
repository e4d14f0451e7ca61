import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from planebranch.config import settings
from planebranch.kernel import keytheorem
from planebranch.kernel.algebra import BivariatePolynomial, YPolynomial
from planebranch.kernel.branch import Branch, is_irreducible
from planebranch.kernel.localideal import (
    certified_basis,
    colength,
    hilbert_samuel_e0,
    jacobian_ideal,
    mu_stability,
    tjurina_ideal,
    unit_probe,
)
from planebranch.kernel.prep import is_weierstrass, weierstrass_by_coords
from planebranch.kernel.semigroup import (
    ValueSemigroup,
    characteristic_exponents,
    semigroup_of,
)
from planebranch.kernel.values import INFINITE, Count, MuStability, is_infinite
from planebranch.schemas.common import CheckOutcome, count_out
from planebranch.schemas.report import (
    InvariantReport,
    KeyRow,
    KeyTheoremReport,
    MilnorFormulaReport,
    PairIntersection,
    SemigroupSummary,
    UnitProbeRow,
)
from planebranch.utils.errors import (
    InvalidInput,
    NotIsolated,
    NotPrimary,
    PrecisionExhausted,
    Reducible,
)

logger = logging.getLogger(__name__)


def _skipped(name: str, reason: str) -> CheckOutcome:
    return CheckOutcome(name=name, passed=True, skipped=True, witness={"reason": reason})


class InvariantService:
    """Invariants and identity checks of plane curve germs"""

    def __init__(self):
        self._branches: Dict[BivariatePolynomial, Branch] = {}
        self._semigroups: Dict[BivariatePolynomial, ValueSemigroup] = {}

    # Branch data

    def branch(self, f: BivariatePolynomial) -> Branch:
        if f not in self._branches:
            self._branches[f] = Branch(f)
        return self._branches[f]

    def semigroup(self, f: BivariatePolynomial) -> ValueSemigroup:
        if f not in self._semigroups:
            self._semigroups[f] = semigroup_of(self.branch(f))
        return self._semigroups[f]

    def semigroup_summary(self, f: BivariatePolynomial) -> SemigroupSummary:
        S = self.semigroup(f)
        seq = self.branch(f).multiplicity_sequence()
        exponents = characteristic_exponents(seq) if seq and seq[0] > 1 else [1]
        return SemigroupSummary(
            generators=list(S.generators),
            conductor=S.conductor,
            genus=S.genus,
            tame=S.is_tame(f.spec.characteristic),
            symmetric=S.is_symmetric(),
            delta=S.conductor // 2,
            multiplicity_sequence=seq,
            characteristic_exponents=exponents,
            apery=S.apery_set(),
        )

    # Numerical invariants

    def milnor_number(self, f: BivariatePolynomial) -> Count:
        if f.is_zero():
            raise InvalidInput("the zero series has no Milnor number")
        if f.order() is not None and f.order() < 2:
            return 0
        return colength(certified_basis(jacobian_ideal(f)))

    def tjurina_number(self, f: BivariatePolynomial) -> Count:
        if f.order() is not None and f.order() < 2:
            return 0
        return colength(certified_basis(tjurina_ideal(f)))

    def curve_milnor(self, f: BivariatePolynomial) -> int:
        """mu(C) = e_0(T(f))"""
        if f.order() is not None and f.order() < 2:
            return 0
        return hilbert_samuel_e0(tjurina_ideal(f))

    def mu_stability(self, f: BivariatePolynomial, lmax: Optional[int] = None) -> MuStability:
        return mu_stability(f, lmax or settings.lmax)

    def delta_invariant(self, target) -> int:
        """c/2 for a branch; sum of deltas plus pairwise intersections for several"""
        if isinstance(target, BivariatePolynomial):
            return self.semigroup(target).conductor // 2
        factors = list(target)
        self._validate_factors(factors)
        total = sum(self.semigroup(f).conductor // 2 for f in factors)
        for a, b in combinations(factors, 2):
            value = self.branch(a).valuation(b)
            if is_infinite(value):
                raise InvalidInput("factors share a component", {"factors": [a.to_str(), b.to_str()]})
            total += value
        return total

    def _validate_factors(self, factors: Sequence[BivariatePolynomial]) -> None:
        if not factors:
            raise InvalidInput("no factors given")
        for idx, f in enumerate(factors):
            if not is_irreducible(f):
                raise Reducible(idx, f.order() or 0)

    def milnor_formula_report(self, factors: Sequence[BivariatePolynomial]) -> MilnorFormulaReport:
        """mu(prod f_i) against 2 delta + 1 - r"""
        factors = list(factors)
        self._validate_factors(factors)
        spec = factors[0].spec
        p = spec.characteristic
        product = BivariatePolynomial.one(spec)
        for f in factors:
            product = product * f
        deltas = [self.semigroup(f).conductor // 2 for f in factors]
        pairs = []
        for (i, a), (j, b) in combinations(enumerate(factors), 2):
            value = self.branch(a).valuation(b)
            if is_infinite(value):
                raise InvalidInput("factors share a component", {"i": i, "j": j})
            pairs.append(PairIntersection(i=i, j=j, value=value))
        delta = sum(deltas) + sum(pair.value for pair in pairs)
        r = len(factors)
        mu = self.milnor_number(product)
        rhs = 2 * delta + 1 - r
        e0 = None
        if not is_infinite(mu):
            try:
                e0 = self.curve_milnor(product)
            except (NotPrimary, NotIsolated):
                e0 = None
        report = MilnorFormulaReport(
            mu=count_out(mu),
            two_delta_plus=rhs,
            equal=mu == rhs,
            r=r,
            delta=delta,
            branch_deltas=deltas,
            intersections=pairs,
            all_tame=all(self.semigroup(f).is_tame(p) for f in factors),
            p_divides_intersection=bool(p) and any(pair.value % p == 0 for pair in pairs),
            e0_tjurina=e0,
        )
        logger.info("milnor formula: mu=%s, 2delta+1-r=%d", mu, rhs)
        return report

    # Identity checks

    def bracket(self, f: BivariatePolynomial, g: BivariatePolynomial) -> BivariatePolynomial:
        return keytheorem.bracket(f, g)

    def check_gorenstein(self, f: BivariatePolynomial) -> CheckOutcome:
        """v(f_Y) = c + v(x') and v(f_X) = c + v(y')"""
        branch = self.branch(f)
        c = self.semigroup(f).conductor
        x = BivariatePolynomial.x(f.spec)
        y = BivariatePolynomial.y(f.spec)
        v_fy = branch.valuation(f.derivative("Y"))
        v_fx = branch.valuation(f.derivative("X"))
        v_dx = branch.t_derivative_order(x)
        v_dy = branch.t_derivative_order(y)
        rhs_y = INFINITE if is_infinite(v_dx) else c + v_dx
        rhs_x = INFINITE if is_infinite(v_dy) else c + v_dy
        witness = {
            "conductor": c,
            "v_fy": count_out(v_fy),
            "c_plus_v_dx": count_out(rhs_y),
            "v_fx": count_out(v_fx),
            "c_plus_v_dy": count_out(rhs_x),
        }
        return CheckOutcome(name="gorenstein", passed=v_fy == rhs_y and v_fx == rhs_x, witness=witness)

    def check_delgado(self, f: BivariatePolynomial, g: BivariatePolynomial) -> CheckOutcome:
        """v([f, g]) = c + v(g'(t)); v([f, g]) >= c + v(g) - 1 with equality iff p does not divide v(g)"""
        branch = self.branch(f)
        c = self.semigroup(f).conductor
        p = f.spec.characteristic
        v_g = branch.valuation(g)
        if is_infinite(v_g):
            raise InvalidInput("g vanishes on the branch", {"g": g.to_str()})
        v_bracket = branch.valuation(self.bracket(f, g))
        v_dg = branch.t_derivative_order(g)
        identity = (is_infinite(v_bracket) and is_infinite(v_dg)) or v_bracket == c + v_dg
        bound = c + v_g - 1
        equality_expected = p == 0 or v_g % p != 0
        inequality = v_bracket >= bound and (v_bracket == bound) == equality_expected
        witness = {
            "conductor": c,
            "v_g": v_g,
            "v_bracket": count_out(v_bracket),
            "v_dg": count_out(v_dg),
            "bound": bound,
            "equality_expected": equality_expected,
            "identity": identity,
            "inequality": inequality,
        }
        return CheckOutcome(name="delgado", passed=identity and inequality, witness=witness)

    def conductor_ideal_check(self, f: BivariatePolynomial, mu: Optional[Count] = None, tau: Optional[Count] = None) -> CheckOutcome:
        """J(f) inside the conductor ideal, tau >= c/2 and mu >= c"""
        branch = self.branch(f)
        c = self.semigroup(f).conductor
        v_fx = branch.valuation(f.derivative("X"))
        v_fy = branch.valuation(f.derivative("Y"))
        tau = self.tjurina_number(f) if tau is None else tau
        mu = self.milnor_number(f) if mu is None else mu
        deligne = True if is_infinite(mu) else mu >= c
        passed = v_fx >= c and v_fy >= c and 2 * tau >= c and deligne
        witness = {
            "conductor": c,
            "v_fx": count_out(v_fx),
            "v_fy": count_out(v_fy),
            "tau": count_out(tau),
            "mu": count_out(mu),
            "deligne_skipped": is_infinite(mu),
        }
        return CheckOutcome(name="conductor_ideal", passed=passed, witness=witness)

    def tame_finite_check(self, f: BivariatePolynomial, mu: Optional[Count] = None) -> CheckOutcome:
        """tame semigroup implies finite Milnor number"""
        S = self.semigroup(f)
        p = f.spec.characteristic
        if not S.is_tame(p):
            return _skipped("tame_finite", "semigroup is not tame")
        mu = self.milnor_number(f) if mu is None else mu
        return CheckOutcome(name="tame_finite", passed=not is_infinite(mu), witness={"mu": count_out(mu)})

    def main_theorem_check(self, f: BivariatePolynomial, mu: Optional[Count] = None) -> CheckOutcome:
        """tame implies mu = c, and unit multiples keep mu"""
        S = self.semigroup(f)
        p = f.spec.characteristic
        if not S.is_tame(p):
            return _skipped("main_theorem", "semigroup is not tame")
        mu = self.milnor_number(f) if mu is None else mu
        probes = self.unit_probe(f)
        stable = all(row.mu == count_out(mu) for row in probes)
        witness = {
            "mu": count_out(mu),
            "conductor": S.conductor,
            "unit_probes": [row.model_dump() for row in probes],
        }
        return CheckOutcome(name="main_theorem", passed=mu == S.conductor and stable, witness=witness)

    def conjecture_evidence(self, f: BivariatePolynomial, mu: Optional[Count] = None) -> Dict:
        """mu - c on a wild branch; logged, never asserted"""
        S = self.semigroup(f)
        p = f.spec.characteristic
        mu = self.milnor_number(f) if mu is None else mu
        wild = not S.is_tame(p)
        gap = None if is_infinite(mu) else mu - S.conductor
        record = {
            "generators": list(S.generators),
            "wild": wild,
            "mu": count_out(mu),
            "conductor": S.conductor,
            "gap": gap,
            "mu_exceeds_c": is_infinite(mu) or (gap is not None and gap > 0),
        }
        if wild:
            logger.info("wild branch %s over %s: mu - c = %s", f.to_str(), f.spec, gap if gap is not None else "infinite")
        return record

    def counting_check(self, S: ValueSemigroup) -> CheckOutcome:
        """#(S minus (S + c - 1)) = c by direct set arithmetic"""
        c = S.conductor
        members = [x for x in range(2 * c + 1) if S.contains(x)]
        outside = [x for x in members if not S.contains(x - c + 1)]
        return CheckOutcome(
            name="counting",
            passed=len(outside) == c,
            witness={"conductor": c, "count": len(outside), "sweep": S.sweep_set() == sorted(S.sweep_set())},
        )

    def unit_probe(self, f: BivariatePolynomial, units: Optional[Sequence[BivariatePolynomial]] = None) -> List[UnitProbeRow]:
        spec = f.spec
        if units is None:
            one = BivariatePolynomial.one(spec)
            units = [one + BivariatePolynomial.x(spec), one + BivariatePolynomial.y(spec)]
        rows = []
        for u, mu in unit_probe(f, units):
            rows.append(UnitProbeRow(unit=u.to_str(), mu=count_out(mu)))
        return rows

    def mu_stability_check(self, f: BivariatePolynomial, lmax: Optional[int] = None) -> CheckOutcome:
        outcome = self.mu_stability(f, lmax)
        return CheckOutcome(
            name="mu_stability",
            passed=outcome.is_stable,
            witness={"result": str(outcome), "stable_at": outcome.stable_at, "bound": outcome.bound},
        )

    # Key theorem

    def determinacy_bound(self, f: BivariatePolynomial, tau: Optional[Count] = None) -> int:
        """Order from which terms no longer change the contact class: 2 tau - ord + 2"""
        tau = self.tjurina_number(f) if tau is None else tau
        if is_infinite(tau):
            raise NotIsolated()
        return max(2 * tau - f.order() + 2, settings.prep_precision)

    def weierstrass_equation(self, f: BivariatePolynomial) -> BivariatePolynomial:
        if f.is_monic_in_y() and is_weierstrass(YPolynomial(f)):
            return f
        tau = self.tjurina_number(f)
        bound = self.determinacy_bound(f, tau)
        _, prepared = weierstrass_by_coords(f, bound)
        if prepared.x_precision is not None:
            if prepared.x_precision < bound:
                raise PrecisionExhausted("weierstrass preparation", prepared.x_precision, bound)
            # truncated terms lie in m^bound; the Tjurina number must survive
            if self.tjurina_number(prepared.poly) != tau:
                raise PrecisionExhausted("weierstrass preparation", prepared.x_precision, 2 * bound)
        logger.info("normalized %s to %s", f.to_str(), prepared.poly.to_str())
        return prepared.poly

    def key_theorem(self, f: BivariatePolynomial, s_values: Optional[Sequence[int]] = None) -> KeyTheoremReport:
        w = self.weierstrass_equation(f)
        tower = keytheorem.build_tower(w, self.semigroup(w))
        verdict = keytheorem.verify_key_theorem(tower, s_values)
        brackets = keytheorem.check_bracket_inequality(tower)
        rows = [
            KeyRow(
                s=row.s,
                intersection=count_out(row.intersection),
                expected=row.expected,
                degree=row.degree,
                member=row.member,
                passed=row.passed,
            )
            for row in verdict.rows
        ]
        failures = verdict.failures() + [f"bracket row j={b['j']} fails" for b in brackets if not b["holds"]]
        logger.info("key theorem threshold %d", verdict.threshold)
        return KeyTheoremReport(
            mu=count_out(verdict.mu),
            conductor=verdict.conductor,
            rank=verdict.rank,
            threshold=verdict.threshold,
            tower=[root.to_str() for root in tower.roots],
            rows=rows,
            brackets=[{**b, "value": count_out(b["value"])} for b in brackets],
            passed=verdict.passed and all(b["holds"] for b in brackets),
            failures=failures,
        )

    # Full report

    def report(self, f: BivariatePolynomial, lmax: Optional[int] = None) -> InvariantReport:
        spec = f.spec
        irreducible = is_irreducible(f)
        mu = self.milnor_number(f)
        tau = self.tjurina_number(f)
        e0 = None
        stable_at = None
        checks: Dict[str, CheckOutcome] = {}
        if not is_infinite(tau):
            e0 = self.curve_milnor(f)
            stability = self.mu_stability_check(f, lmax)
            stable_at = stability.witness["stable_at"]
            checks["mu_stability"] = stability
        report = InvariantReport(
            char=spec.characteristic,
            ext=spec.extension_degree,
            poly=f.to_str(),
            irreducible=irreducible,
            mu=count_out(mu),
            tau=count_out(tau),
            e0_tjurina=e0,
            mu_stable_at=stable_at,
            checks=checks,
        )
        if not irreducible:
            return report
        S = self.semigroup(f)
        report.semigroup = list(S.generators)
        report.conductor = S.conductor
        report.delta = S.conductor // 2
        report.tame = S.is_tame(spec.characteristic)
        # logs mu - c on wild branches
        report.wild_gap = self.conjecture_evidence(f, mu)["gap"]
        if f.order() and f.order() >= 2:
            checks["gorenstein"] = self.check_gorenstein(f)
            checks["delgado_x"] = self.check_delgado(f, BivariatePolynomial.x(spec))
            checks["conductor_ideal"] = self.conductor_ideal_check(f, mu, tau)
            checks["tame_finite"] = self.tame_finite_check(f, mu)
            checks["main_theorem"] = self.main_theorem_check(f, mu)
            checks["counting"] = self.counting_check(S)
        return report


def failed_checks(checks: Dict[str, CheckOutcome]) -> List[str]:
    return [name for name, outcome in checks.items() if not outcome.skipped and not outcome.passed and name != "mu_stability"]

