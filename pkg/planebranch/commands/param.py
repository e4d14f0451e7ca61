from planebranch.commands.common import CommandResult, render_pairs, series_text
from planebranch.kernel.branch import hn_expand, multiplicity_sequence
from planebranch.schemas.command import Command
from planebranch.schemas.report import ParametrizationOutput
from planebranch.services.parser_service import ParserService

parser_service = ParserService()


def execute(cmd: Command) -> CommandResult:
    """Hamburger-Noether parametrization (x(t), y(t))"""
    spec = parser_service.parse_field(cmd.field, cmd.ext)
    f = parser_service.parse_expression(cmd.expression, spec)
    chain, par = hn_expand(f, cmd.precision)
    output = ParametrizationOutput(
        x=series_text(par.x),
        y=series_text(par.y),
        precision=par.precision,
        multiplicity_sequence=multiplicity_sequence(chain),
        transversal=par.transversal,
        order_pair=list(par.order_pair()),
    )
    text = render_pairs(
        f"parametrization of {f.to_str()} over {spec}",
        [
            ("x(t)", output.x),
            ("y(t)", output.y),
            ("multiplicities", output.multiplicity_sequence),
            ("transversal", output.transversal),
        ],
    )
    return CommandResult(output, text)
