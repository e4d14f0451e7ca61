import random

import pytest

from planebranch.kernel.algebra import BivariatePolynomial
from planebranch.kernel.branch import random_branch_equation
from planebranch.kernel.field import FieldSpec
from planebranch.services.invariant_service import InvariantService, failed_checks
from planebranch.utils.errors import InvalidInput, NotIsolated, Reducible
from tests.helpers import poly


@pytest.fixture
def service():
    return InvariantService()


def test_cusp_report(service, cusp7):
    report = service.report(cusp7)
    assert report.irreducible
    assert report.mu == 2
    assert report.tau == 2
    assert report.e0_tjurina == 2
    assert report.semigroup == [2, 3]
    assert report.conductor == 2
    assert report.delta == 1
    assert report.tame
    assert report.mu_stable_at == 1
    assert report.wild_gap == 0
    assert failed_checks(report.checks) == []


def test_wild_report_records_infinite_mu(service):
    report = service.report(poly("Y^3+X^4", 3))
    assert report.mu == "infinite"
    assert report.tau == 9
    assert report.wild_gap is None
    assert not report.tame


def test_reducible_report_has_no_semigroup(service):
    report = service.report(poly("X^2*Y+Y^2*X", 3))
    assert not report.irreducible
    assert report.semigroup is None
    assert report.mu == "infinite"


def test_smooth_milnor_number(service):
    assert service.milnor_number(poly("Y-X^2", 7)) == 0


def test_gorenstein_and_delgado(service, cusp7):
    assert service.check_gorenstein(cusp7).passed
    outcome = service.check_delgado(cusp7, poly("X", 7))
    assert outcome.passed
    assert outcome.witness["v_bracket"] == 3


def test_delgado_rejects_curve_through_branch(service, cusp7):
    with pytest.raises(InvalidInput):
        service.check_delgado(cusp7, cusp7)


def test_conductor_ideal(service, genus2_f7):
    outcome = service.conductor_ideal_check(genus2_f7)
    assert outcome.passed
    assert outcome.witness["conductor"] == 28


def test_main_theorem_skipped_when_wild(service):
    outcome = service.main_theorem_check(poly("Y^3-X^11", 3))
    assert outcome.skipped


def test_counting(service):
    assert service.counting_check(service.semigroup(poly("Y^3-X^11", 7))).passed


def test_unit_probe(service, cusp7):
    rows = service.unit_probe(cusp7)
    assert [row.mu for row in rows] == [2, 2]


def test_milnor_formula_for_two_smooth_branches(service):
    report = service.milnor_formula_report([poly("Y-X^2", 7), poly("Y+X^2", 7)])
    assert report.intersections[0].value == 2
    assert report.mu == 3
    assert report.two_delta_plus == 3
    assert report.equal
    assert report.r == 2


def test_milnor_formula_rejects_reducible_factor(service):
    with pytest.raises(Reducible):
        service.milnor_formula_report([poly("X*Y", 7)])


def test_delta_of_factors(service):
    assert service.delta_invariant([poly("Y-X^2", 7), poly("Y+X^2", 7)]) == 2
    assert service.delta_invariant(poly("Y^3-X^5", 7)) == 4


def test_key_theorem_report(service, cusp7):
    report = service.key_theorem(cusp7)
    assert report.passed
    assert report.tower == ["X", "Y"]
    assert report.threshold == 7


def test_key_theorem_normalizes_first(service):
    report = service.key_theorem(poly("(Y-X)^2-X^3", 7))
    assert report.conductor == 2
    assert report.passed


def test_conjecture_evidence_on_wild_branch(service):
    record = service.conjecture_evidence(poly("Y^3-X^11", 3))
    assert record["wild"]
    assert record["conductor"] == 20
    assert record["mu_exceeds_c"]


def test_wild_gap_comes_from_conjecture_evidence(service, caplog):
    f = poly("Y^3-X^11+X^8*Y", 3)
    caplog.set_level("INFO")
    report = service.report(f)
    record = service.conjecture_evidence(f)
    assert not report.tame
    assert report.wild_gap == record["gap"]
    assert "wild branch" in caplog.text


def test_weierstrass_equation_keeps_terms_past_default_precision(service):
    # leading coefficient 1+X is rescaled away; X^31 lies past the default precision
    f = poly("Y^3+X*Y^3-X^31", 7)
    assert service.determinacy_bound(f) == 119
    assert service.weierstrass_equation(f) == poly("Y^3-X^31", 7)


def test_weierstrass_equation_rescales_unit_multiple(service):
    assert service.weierstrass_equation(poly("(1+X)*(Y^3-X^11)", 7)) == poly("Y^3-X^11-X^12", 7)


def test_determinacy_bound_needs_isolated_singularity(service):
    with pytest.raises(NotIsolated):
        service.determinacy_bound(poly("(Y-X)^2", 7))


def test_key_theorem_after_unit_rescale(service):
    f = poly("(1+X)*(Y^3-X^11)", 7)
    report = service.key_theorem(f)
    assert report.passed
    assert report.mu == report.conductor == 20


@pytest.mark.slow
def test_key_theorem_after_levinson_step(service):
    f = poly("Y^2+Y^3-X^25", 7)
    assert service.milnor_number(f) == 24
    report = service.key_theorem(f)
    assert report.passed
    assert report.mu == report.conductor == 24


@pytest.mark.slow
def test_key_theorem_with_high_order_terms(service):
    report = service.key_theorem(poly("Y^3+X*Y^3-X^31", 7))
    assert report.passed
    assert report.mu == report.conductor == 60


@pytest.mark.slow
def test_identity_checks_on_random_branches(service):
    rng = random.Random(5)
    for _ in range(50):
        spec = FieldSpec(rng.choice([5, 7, 11, 13]))
        f = random_branch_equation(rng, spec)
        x, y = BivariatePolynomial.x(spec), BivariatePolynomial.y(spec)
        S = service.semigroup(f)
        assert len(S.generators) == 2 and S.generators[0] == f.order()
        assert S.is_symmetric()
        assert service.check_gorenstein(f).passed, f.to_str()
        assert service.check_delgado(f, x).passed, f.to_str()
        assert service.check_delgado(f, y).passed, f.to_str()
        assert service.conductor_ideal_check(f).passed, f.to_str()
