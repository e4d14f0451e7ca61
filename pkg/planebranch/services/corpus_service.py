"""Concurrent runner for line-delimited corpus files.

Each entry is evaluated in a worker process; results come back in input
order.  Only the keys an entry lists under ``expected`` are computed.
"""

import asyncio
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from planebranch.config import override_settings, settings
from planebranch.kernel.algebra import BivariatePolynomial
from planebranch.kernel.branch import Branch, is_irreducible
from planebranch.schemas.common import count_out
from planebranch.schemas.corpus import CorpusEntry, CorpusResult, CorpusSummary, Mismatch
from planebranch.services.invariant_service import InvariantService
from planebranch.services.parser_service import ParserService
from planebranch.utils.errors import BranchError, InvalidInput

logger = logging.getLogger(__name__)

Observable = Callable[[], Any]


def _unit_mu(service: InvariantService, f: BivariatePolynomial, unit: BivariatePolynomial) -> Any:
    return count_out(service.milnor_number(unit * f))


def _branch_observables(service: InvariantService, f: BivariatePolynomial, g: Optional[BivariatePolynomial]) -> Dict[str, Observable]:
    spec = f.spec
    one = BivariatePolynomial.one(spec)
    x = BivariatePolynomial.x(spec)
    y = BivariatePolynomial.y(spec)

    def needs_g() -> BivariatePolynomial:
        if g is None:
            raise InvalidInput("entry needs a second curve g")
        return g

    def checks_pass() -> bool:
        outcomes = [
            service.check_gorenstein(f),
            service.check_delgado(f, x),
            service.conductor_ideal_check(f),
        ]
        return all(o.passed for o in outcomes)

    return {
        "irreducible": lambda: is_irreducible(f),
        "mu": lambda: count_out(service.milnor_number(f)),
        "tau": lambda: count_out(service.tjurina_number(f)),
        "e0_tjurina": lambda: service.curve_milnor(f),
        "mu_unit_x": lambda: _unit_mu(service, f, one + x),
        "mu_unit_y": lambda: _unit_mu(service, f, one + y),
        "mu_stable_at": lambda: service.mu_stability(f).stable_at,
        "semigroup": lambda: list(service.semigroup(f).generators),
        "conductor": lambda: service.semigroup(f).conductor,
        "delta": lambda: service.delta_invariant(f),
        "tame": lambda: service.semigroup(f).is_tame(spec.characteristic),
        "multiplicity_sequence": lambda: service.branch(f).multiplicity_sequence(),
        "mu_equals_c": lambda: service.milnor_number(f) == service.semigroup(f).conductor,
        "counting": lambda: service.counting_check(service.semigroup(f)).passed,
        "checks_pass": checks_pass,
        "key_theorem": lambda: service.key_theorem(f).passed,
        "intersection": lambda: count_out(Branch(f).valuation(needs_g())),
        "delgado": lambda: service.check_delgado(f, needs_g()).passed,
    }


def _factor_observables(service: InvariantService, factors: List[BivariatePolynomial]) -> Dict[str, Observable]:
    spec = factors[0].spec
    product = BivariatePolynomial.one(spec)
    for f in factors:
        product = product * f
    one = BivariatePolynomial.one(spec)
    cache: Dict[str, Any] = {}

    def formula():
        if "report" not in cache:
            cache["report"] = service.milnor_formula_report(factors)
        return cache["report"]

    def pair_intersection():
        if len(factors) != 2:
            raise InvalidInput("intersection needs exactly two factors")
        return count_out(service.branch(factors[0]).valuation(factors[1]))

    return {
        "mu": lambda: count_out(service.milnor_number(product)),
        "tau": lambda: count_out(service.tjurina_number(product)),
        "e0_tjurina": lambda: service.curve_milnor(product),
        "mu_unit_x": lambda: _unit_mu(service, product, one + BivariatePolynomial.x(spec)),
        "mu_unit_y": lambda: _unit_mu(service, product, one + BivariatePolynomial.y(spec)),
        "mu_stable_at": lambda: service.mu_stability(product).stable_at,
        "delta": lambda: service.delta_invariant(factors),
        "two_delta_plus": lambda: formula().two_delta_plus,
        "equal": lambda: formula().equal,
        "intersection": pair_intersection,
    }


def _same(expected: Any, found: Any) -> bool:
    if isinstance(expected, (list, tuple)) and isinstance(found, (list, tuple)):
        return list(expected) == list(found)
    return expected == found


def evaluate_entry(index: int, payload: Dict[str, Any], overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Evaluate one corpus line; runs inside a worker process"""
    name = payload.get("name") if isinstance(payload, dict) else None
    try:
        entry = CorpusEntry.model_validate(payload)
    except ValidationError as exc:
        error = InvalidInput("invalid corpus entry", {"errors": [{"loc": list(e["loc"]), "msg": e["msg"]} for e in exc.errors()]})
        return CorpusResult(index=index, name=name, passed=False, error=error.to_dict()).model_dump(mode="json")
    parser = ParserService()
    service = InvariantService()
    observed: Dict[str, Any] = {}
    mismatches: List[Mismatch] = []
    recorded: List[Mismatch] = []
    try:
        with override_settings(**(overrides or {})):
            spec = parser.parse_field(entry.field, entry.ext)
            g = parser.parse_expression(entry.g, spec) if entry.g else None
            if entry.expr:
                observables = _branch_observables(service, parser.parse_expression(entry.expr, spec), g)
            else:
                observables = _factor_observables(service, parser.parse_factors(entry.factors, spec))
            for key, expected in entry.expected.items():
                if key not in observables:
                    raise InvalidInput("unknown expected key", {"key": key, "known": sorted(observables)})
                found = observables[key]()
                observed[key] = found
                row = Mismatch(key=key, expected=expected, found=found, record_only=key in entry.record_only)
                if key in entry.record_only:
                    recorded.append(row)
                elif not _same(expected, found):
                    mismatches.append(row)
    except BranchError as exc:
        logger.info("corpus entry %d failed: %s", index, exc.message)
        return CorpusResult(
            index=index, name=entry.name, passed=False, observed=observed, error=exc.to_dict()
        ).model_dump(mode="json")
    result = CorpusResult(
        index=index,
        name=entry.name,
        passed=not mismatches,
        observed=observed,
        mismatches=mismatches,
        recorded=recorded,
    )
    return result.model_dump(mode="json")


class CorpusService:
    """Runs every entry of a corpus file with bounded concurrency"""

    def __init__(self, workers: Optional[int] = None, overrides: Optional[Dict[str, Any]] = None):
        self.workers = workers or settings.corpus_workers
        self.overrides = overrides or {}

    def load(self, path: str) -> List[Dict[str, Any]]:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        payloads = []
        for number, line in enumerate(lines, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                payloads.append(json.loads(stripped))
            except json.JSONDecodeError as exc:
                raise InvalidInput("corpus line is not JSON", {"line": number, "issue": exc.msg})
        return payloads

    async def run_payloads(self, payloads: List[Dict[str, Any]]) -> CorpusSummary:
        loop = asyncio.get_running_loop()
        semaphore = asyncio.Semaphore(self.workers)
        with ProcessPoolExecutor(max_workers=self.workers) as pool:

            async def run_one(index: int, payload: Dict[str, Any]) -> Dict[str, Any]:
                async with semaphore:
                    return await loop.run_in_executor(pool, evaluate_entry, index, payload, self.overrides)

            raw = await asyncio.gather(*(run_one(i, p) for i, p in enumerate(payloads)))
        results = [CorpusResult.model_validate(r) for r in raw]
        summary = CorpusSummary(
            total=len(results),
            passed=sum(1 for r in results if r.passed),
            failed=sum(1 for r in results if not r.passed and r.error is None),
            errors=sum(1 for r in results if r.error is not None),
            settings={**settings.model_dump(), **self.overrides, "corpus_workers": self.workers},
            results=results,
        )
        logger.info("corpus: %d/%d passed", summary.passed, summary.total)
        return summary

    async def run(self, path: str) -> CorpusSummary:
        return await self.run_payloads(self.load(path))


def corpus_run(path: str, workers: Optional[int] = None, overrides: Optional[Dict[str, Any]] = None) -> CorpusSummary:
    return asyncio.run(CorpusService(workers, overrides).run(path))
