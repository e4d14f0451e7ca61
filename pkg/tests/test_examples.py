"""Worked examples shipped in corpus/worked_examples.jsonl"""

import json
from pathlib import Path

import pytest

from planebranch.kernel.algebra import BivariatePolynomial, resultant_y
from planebranch.kernel.branch import Branch
from planebranch.kernel.localideal import certified_basis, colength, jacobian_ideal, macaulay_colength
from planebranch.kernel.values import is_infinite
from planebranch.schemas.report import InvariantReport
from planebranch.services.corpus_service import evaluate_entry
from planebranch.services.parser_service import ParserService

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus" / "worked_examples.jsonl"

# Genus two branches, their products and the long preparations take minutes
SLOW_MARKERS = ("<4,6,25>", "<4,6,13>", "<2,25>", "<3,31>")


def _entries():
    for line in CORPUS.read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            payload = json.loads(line)
            marks = [pytest.mark.slow] if any(m in payload["name"] for m in SLOW_MARKERS) else []
            yield pytest.param(payload, id=payload["name"], marks=marks)


@pytest.mark.parametrize("payload", list(_entries()))
def test_corpus_entry(payload):
    result = evaluate_entry(0, payload)
    assert result["error"] is None, result["error"]
    assert result["passed"], result["mismatches"]


def test_report_schema_matches_model():
    schema = json.loads((ROOT / "docs" / "report.schema.json").read_text(encoding="utf-8"))
    assert set(schema["properties"]) == set(InvariantReport.model_fields)
    assert set(schema["required"]) == {name for name, info in InvariantReport.model_fields.items() if info.is_required()}


def _branch_entries():
    for param in _entries():
        if param.values[0]["expected"].get("irreducible") is not False:
            yield param


def _curves(payload):
    parser = ParserService()
    spec = parser.parse_field(payload["field"], payload.get("ext"))
    if payload.get("expr"):
        return [parser.parse_expression(payload["expr"], spec)]
    return parser.parse_factors(payload["factors"], spec)


@pytest.mark.parametrize("payload", list(_branch_entries()))
def test_standard_basis_colength_matches_linear_algebra(payload):
    curves = _curves(payload)
    f = curves[0]
    for g in curves[1:]:
        f = f * g
    gens = jacobian_ideal(f)
    sb = certified_basis(gens)
    mu = colength(sb)
    if is_infinite(mu):
        pytest.skip("Milnor number is infinite")
    # M^d lies in the ideal from the certificate degree on
    assert macaulay_colength(gens, sb.certificate_degree) == mu


@pytest.mark.parametrize("payload", list(_branch_entries()))
def test_valuation_matches_resultant_order(payload):
    curves = _curves(payload)
    spec = curves[0].spec
    x, y = BivariatePolynomial.x(spec), BivariatePolynomial.y(spec)
    branch = Branch(curves[0])
    partners = curves[1:] or [y, y - x.pow(2)]
    for g in partners:
        assert branch.valuation(g) == resultant_y(curves[0], g).order(), g.to_str()
