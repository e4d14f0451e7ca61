import logging

from planebranch.commands.common import CommandResult, render_pairs
from planebranch.kernel.prep import is_weierstrass, weierstrass_by_coords
from planebranch.schemas.command import Command
from planebranch.schemas.report import PreparedOutput
from planebranch.services.parser_service import ParserService

logger = logging.getLogger(__name__)

parser_service = ParserService()


def execute(cmd: Command) -> CommandResult:
    """Weierstrass polynomial reached by a recorded change of coordinates"""
    spec = parser_service.parse_field(cmd.field, cmd.ext)
    f = parser_service.parse_expression(cmd.expression, spec)
    automorphism, prepared = weierstrass_by_coords(f, cmd.precision)
    described = automorphism.describe()
    output = PreparedOutput(
        automorphism={"X": described["X"], "Y": described["Y"], "precision": str(described["precision"])},
        polynomial=prepared.poly.to_str(),
        degree=prepared.degree,
        x_precision=prepared.x_precision,
        weierstrass=is_weierstrass(prepared),
    )
    logger.info("prepared %s over %s", f.to_str(), spec)
    text = render_pairs(
        f"weierstrass form of {f.to_str()} over {spec}",
        [
            ("X ->", output.automorphism["X"]),
            ("Y ->", output.automorphism["Y"]),
            ("polynomial", output.polynomial),
            ("known modulo X^", output.x_precision),
        ],
    )
    return CommandResult(output, text)
