from planebranch.commands.common import CommandResult, render_pairs
from planebranch.schemas.command import Command
from planebranch.services.invariant_service import InvariantService
from planebranch.services.parser_service import ParserService

parser_service = ParserService()


def execute(cmd: Command) -> CommandResult:
    spec = parser_service.parse_field(cmd.field, cmd.ext)
    f = parser_service.parse_expression(cmd.expression, spec)
    summary = InvariantService().semigroup_summary(f)
    text = render_pairs(
        f"semigroup of {f.to_str()} over {spec}",
        [
            ("generators", summary.generators),
            ("conductor", summary.conductor),
            ("genus", summary.genus),
            ("tame", summary.tame),
            ("symmetric", summary.symmetric),
            ("delta", summary.delta),
            ("multiplicities", summary.multiplicity_sequence),
            ("characteristic exponents", summary.characteristic_exponents),
            ("apery set", summary.apery),
        ],
    )
    return CommandResult(summary, text)
