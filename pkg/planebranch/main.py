import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError

from planebranch.commands import check, corpus, invariants, param, prepare, semigroup
from planebranch.commands.common import CommandResult
from planebranch.config import override_settings, settings
from planebranch.schemas.command import CheckKind, Command, Verb
from planebranch.schemas.common import ErrorResponse, OutputMode
from planebranch.utils.errors import BranchError, InvalidInput, NoRootInField
from planebranch.utils.logging import setup_logging, verbosity_to_level

logger = logging.getLogger(__name__)

HANDLERS: Dict[Verb, Callable[[Command], CommandResult]] = {
    Verb.INVARIANTS: invariants.execute,
    Verb.SEMIGROUP: semigroup.execute,
    Verb.PARAM: param.execute,
    Verb.PREPARE: prepare.execute,
    Verb.CHECK: check.execute,
    Verb.CORPUS: corpus.execute,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="QQ", help="GF(p), GF(p^k) or QQ")
    common.add_argument("--ext", type=int, help="extension degree over the prime field")
    common.add_argument("--prec", type=int, help="initial series precision")
    common.add_argument("--lmax", type=int, help="bound for the mu-stability search")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="planebranch", description="Invariants of plane branches over any field")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in (Verb.INVARIANTS, Verb.SEMIGROUP, Verb.PARAM, Verb.PREPARE):
        p = sub.add_parser(verb.value, parents=[common])
        p.add_argument("expression")
    p = sub.add_parser(Verb.CHECK.value, parents=[common])
    p.add_argument("check", choices=[kind.value for kind in CheckKind])
    p.add_argument("expression", nargs="?")
    p.add_argument("--g", dest="g_expression", help="second curve for delgado")
    p.add_argument("--factors", help="file with one branch per line")
    p = sub.add_parser(Verb.CORPUS.value, parents=[common])
    p.add_argument("--corpus", required=True, help="line-delimited JSON corpus")
    p.add_argument("--workers", type=int)
    return parser


def _read_factors(path: Optional[str]) -> List[str]:
    if not path:
        return []
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InvalidInput("cannot read factors file", {"path": path, "issue": str(exc)})


def command_from_args(args: argparse.Namespace) -> Command:
    data = {
        "verb": args.verb,
        "check": getattr(args, "check", None),
        "field": args.field,
        "ext": args.ext,
        "precision": args.prec,
        "lmax": args.lmax,
        "workers": getattr(args, "workers", None),
        "expression": getattr(args, "expression", None),
        "g_expression": getattr(args, "g_expression", None),
        "factors": _read_factors(getattr(args, "factors", None)),
        "corpus": getattr(args, "corpus", None),
        "output": OutputMode.JSON if args.json else OutputMode.TEXT,
    }
    try:
        return Command(**data)
    except ValidationError as exc:
        issues = [e["msg"] for e in exc.errors()]
        raise InvalidInput("; ".join(issues), {"arguments": {k: v for k, v in data.items() if k != "factors"}})


def _dispatch(cmd: Command) -> CommandResult:
    with override_settings(default_precision=cmd.precision, lmax=cmd.lmax, corpus_workers=cmd.workers):
        logger.info("effective settings: %s", settings.model_dump())
        return HANDLERS[cmd.verb](cmd)


def run_command(cmd: Command) -> Tuple[str, int]:
    """Rendered output and exit code; never raises on user input"""
    try:
        try:
            result = _dispatch(cmd)
        except NoRootInField as exc:
            if not exc.suggested_extension or exc.suggested_extension > settings.max_extension_degree:
                raise
            logger.warning("escalating to extension degree %d: %s", exc.suggested_extension, exc.message)
            result = _dispatch(cmd.model_copy(update={"ext": exc.suggested_extension}))
    except BranchError as exc:
        return render_error(exc, cmd.output), exc.exit_code
    if cmd.output == OutputMode.JSON:
        return json.dumps(result.as_json_data(), indent=2, ensure_ascii=False), result.exit_code
    return result.text, result.exit_code


def render_error(exc: BranchError, mode: OutputMode) -> str:
    if mode == OutputMode.JSON:
        error = ErrorResponse(code=exc.code, message=exc.message, details=exc.details)
        return json.dumps({"error": error.model_dump(mode="json")}, indent=2, default=str)
    return f"{exc.code}: {exc.message}"


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(verbosity_to_level(args.verbose))
    try:
        cmd = command_from_args(args)
    except BranchError as exc:
        print(render_error(exc, OutputMode.JSON if args.json else OutputMode.TEXT))
        return exc.exit_code
    output, code = run_command(cmd)
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
