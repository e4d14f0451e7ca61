from typing import Callable, Dict

from planebranch.commands.common import CommandResult, render_pairs
from planebranch.kernel.algebra import BivariatePolynomial
from planebranch.kernel.field import FieldSpec
from planebranch.schemas.command import CheckKind, Command
from planebranch.schemas.common import CheckOutcome
from planebranch.services.invariant_service import InvariantService
from planebranch.services.parser_service import ParserService
from planebranch.utils.errors import EXIT_FALSIFIED, EXIT_OK

parser_service = ParserService()


def _outcome_result(outcome: CheckOutcome, falsifiable: bool = True) -> CommandResult:
    state = "skipped" if outcome.skipped else ("pass" if outcome.passed else "FAIL")
    text = render_pairs(f"{outcome.name}: {state}", outcome.witness.items())
    failed = falsifiable and not outcome.skipped and not outcome.passed
    return CommandResult(outcome, text, EXIT_FALSIFIED if failed else EXIT_OK)


def _gorenstein(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    return _outcome_result(service.check_gorenstein(f))


def _delgado(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    g = parser_service.parse_expression(cmd.g_expression, spec)
    return _outcome_result(service.check_delgado(f, g))


def _conductor(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    return _outcome_result(service.conductor_ideal_check(f))


def _main(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    return _outcome_result(service.main_theorem_check(f))


def _counting(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    return _outcome_result(service.counting_check(service.semigroup(f)))


def _mu_stable(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    return _outcome_result(service.mu_stability_check(f, cmd.lmax), falsifiable=False)


def _unit_probe(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    rows = service.unit_probe(f)
    mu = service.milnor_number(f)
    text = render_pairs(
        f"unit multiples of {f.to_str()} (mu = {mu})",
        [(f"mu(({row.unit}) f)", row.mu) for row in rows],
    )
    return CommandResult(rows, text)


def _key(cmd: Command, spec: FieldSpec, f: BivariatePolynomial, service: InvariantService) -> CommandResult:
    report = service.key_theorem(f)
    header = render_pairs(
        f"key theorem for {f.to_str()} over {spec}: {'pass' if report.passed else 'FAIL'}",
        [("mu", report.mu), ("conductor", report.conductor), ("rank", report.rank), ("threshold", report.threshold)],
    )
    lines = [header, "  s  I(f,q_s)  deg  member"]
    lines += [f"  {row.s}  {row.intersection}  {row.degree}  {row.member}" for row in report.rows]
    lines += [f"  {failure}" for failure in report.failures]
    return CommandResult(report, "\n".join(lines), EXIT_OK if report.passed else EXIT_FALSIFIED)


SINGLE_CHECKS: Dict[CheckKind, Callable[..., CommandResult]] = {
    CheckKind.GORENSTEIN: _gorenstein,
    CheckKind.DELGADO: _delgado,
    CheckKind.CONDUCTOR: _conductor,
    CheckKind.MAIN: _main,
    CheckKind.COUNTING: _counting,
    CheckKind.MU_STABLE: _mu_stable,
    CheckKind.UNIT_PROBE: _unit_probe,
    CheckKind.KEY: _key,
}


def _milnor_formula(cmd: Command, spec: FieldSpec, service: InvariantService) -> CommandResult:
    factors = parser_service.parse_factors(cmd.factors, spec)
    report = service.milnor_formula_report(factors)
    text = render_pairs(
        f"milnor formula over {spec} for {len(factors)} branches",
        [
            ("mu", report.mu),
            ("2 delta + 1 - r", report.two_delta_plus),
            ("equal", report.equal),
            ("delta", report.delta),
            ("intersections", [(p.i, p.j, p.value) for p in report.intersections]),
            ("all tame", report.all_tame),
            ("p | I(f_i, f_j)", report.p_divides_intersection),
        ],
    )
    return CommandResult(report, text)


def execute(cmd: Command) -> CommandResult:
    spec = parser_service.parse_field(cmd.field, cmd.ext)
    service = InvariantService()
    if cmd.check == CheckKind.MILNOR_FORMULA:
        return _milnor_formula(cmd, spec, service)
    f = parser_service.parse_expression(cmd.expression, spec)
    return SINGLE_CHECKS[cmd.check](cmd, spec, f, service)
