from planebranch.commands.common import CommandResult
from planebranch.schemas.command import Command
from planebranch.services.corpus_service import corpus_run
from planebranch.utils.errors import EXIT_FALSIFIED, EXIT_OK


def execute(cmd: Command) -> CommandResult:
    overrides = {"default_precision": cmd.precision, "lmax": cmd.lmax}
    summary = corpus_run(cmd.corpus, cmd.workers, {k: v for k, v in overrides.items() if v is not None})
    lines = [f"corpus {cmd.corpus}: {summary.passed}/{summary.total} passed, {summary.errors} errors"]
    for result in summary.results:
        label = result.name or f"#{result.index}"
        if result.error:
            lines.append(f"  ERROR {label}: {result.error['code']}: {result.error['message']}")
        elif not result.passed:
            details = ", ".join(f"{m.key} expected {m.expected} found {m.found}" for m in result.mismatches)
            lines.append(f"  FAIL  {label}: {details}")
        else:
            lines.append(f"  ok    {label}")
        for row in result.recorded:
            lines.append(f"        recorded {row.key}: expected {row.expected}, found {row.found}")
    failed = summary.failed or summary.errors
    return CommandResult(summary, "\n".join(lines), EXIT_FALSIFIED if failed else EXIT_OK)
