from planebranch.commands.common import CommandResult, render_checks, render_pairs
from planebranch.schemas.command import Command
from planebranch.services.invariant_service import InvariantService, failed_checks
from planebranch.services.parser_service import ParserService
from planebranch.utils.errors import EXIT_FALSIFIED, EXIT_OK

parser_service = ParserService()


def execute(cmd: Command) -> CommandResult:
    """Full invariant report for one equation"""
    spec = parser_service.parse_field(cmd.field, cmd.ext)
    f = parser_service.parse_expression(cmd.expression, spec)
    report = InvariantService().report(f, cmd.lmax)
    failed = failed_checks(report.checks)
    text = render_pairs(
        f"invariants of {report.poly} over {spec}",
        [
            ("irreducible", report.irreducible),
            ("mu", report.mu),
            ("tau", report.tau),
            ("e0(T(f))", report.e0_tjurina),
            ("semigroup", report.semigroup),
            ("conductor", report.conductor),
            ("delta", report.delta),
            ("tame", report.tame),
            ("mu stable at", report.mu_stable_at),
            ("mu - c", report.wild_gap),
        ],
    )
    checks = render_checks(report.checks)
    if checks:
        text = f"{text}\n{checks}"
    return CommandResult(report, text, EXIT_FALSIFIED if failed else EXIT_OK)
