import pytest

from planebranch.services.corpus_service import CorpusService, corpus_run, evaluate_entry
from planebranch.utils.errors import InvalidInput


def test_entry_with_matching_values():
    result = evaluate_entry(0, {"field": "GF(7)", "expr": "Y^2-X^3", "expected": {"mu": 2, "semigroup": [2, 3]}})
    assert result["passed"]
    assert result["observed"] == {"mu": 2, "semigroup": [2, 3]}


def test_entry_mismatch():
    result = evaluate_entry(3, {"name": "cusp", "field": "GF(7)", "expr": "Y^2-X^3", "expected": {"mu": 3}})
    assert not result["passed"]
    assert result["mismatches"][0]["found"] == 2
    assert result["error"] is None


def test_record_only_keys_never_fail():
    payload = {
        "field": "GF(7)",
        "expr": "Y^2-X^3",
        "expected": {"mu": 2, "tau": 5},
        "record_only": ["tau"],
    }
    result = evaluate_entry(0, payload)
    assert result["passed"]
    assert result["recorded"][0]["found"] == 2


def test_invalid_entry_is_an_error():
    result = evaluate_entry(0, {"field": "GF(7)", "expected": {"mu": 2}})
    assert result["error"]["code"] == "INPUT_NOT_VALID"


def test_unknown_key_is_an_error():
    result = evaluate_entry(0, {"field": "GF(7)", "expr": "Y^2-X^3", "expected": {"colour": 2}})
    assert not result["passed"]
    assert result["error"]["details"]["key"] == "colour"


def test_factor_entry():
    payload = {"field": "GF(7)", "factors": ["Y-X^2", "Y+X^2"], "expected": {"intersection": 2, "equal": True, "delta": 2}}
    assert evaluate_entry(0, payload)["passed"]


def test_load_skips_comments(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('# header\n\n{"field": "GF(5)", "expr": "Y", "expected": {}}\n', encoding="utf-8")
    assert len(CorpusService(1).load(str(path))) == 1


def test_load_rejects_bad_json(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text("{not json\n", encoding="utf-8")
    with pytest.raises(InvalidInput):
        CorpusService(1).load(str(path))


def test_empty_corpus(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("", encoding="utf-8")
    summary = corpus_run(str(path), workers=1)
    assert summary.total == 0
    assert summary.passed == 0


async def test_results_keep_input_order():
    payloads = [
        {"name": "a", "field": "GF(7)", "expr": "Y^3-X^5", "expected": {"mu": 8}},
        {"name": "b", "field": "GF(5)", "expr": "Y^2-X^3", "expected": {"mu": 2}},
        {"name": "c", "field": "GF(5)", "expr": "Y^2-X^3", "expected": {"mu": 1}},
    ]
    summary = await CorpusService(workers=2).run_payloads(payloads)
    assert [r.name for r in summary.results] == ["a", "b", "c"]
    assert summary.passed == 2
    assert summary.failed == 1
    assert summary.settings["corpus_workers"] == 2
