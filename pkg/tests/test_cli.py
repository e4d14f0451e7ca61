import json

from planebranch.main import main
from planebranch.utils.errors import EXIT_FALSIFIED, EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED


def test_invariants_json(capsys):
    assert main(["invariants", "Y^2-X^3", "--field", "GF(7)", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["char"] == 7
    assert report["mu"] == 2
    assert report["semigroup"] == [2, 3]
    assert report["checks"]["gorenstein"]["passed"]


def test_invariants_text(capsys):
    assert main(["invariants", "Y^3-X^4", "--field", "GF(5)"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "conductor" in out
    assert "mu" in out


def test_infinite_mu_in_json(capsys):
    assert main(["invariants", "Y^3+X^4", "--field", "GF(3)", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["mu"] == "infinite"


def test_parse_error_exit_code(capsys):
    assert main(["invariants", "2X", "--field", "GF(7)", "--json"]) == EXIT_PARSE
    error = json.loads(capsys.readouterr().out)["error"]
    assert error["code"] == "EXPRESSION_SYNTAX"
    assert error["details"]["position"] == 1


def test_bad_field_exit_code(capsys):
    assert main(["semigroup", "Y^2-X^3", "--field", "GF(6)"]) == EXIT_PARSE
    assert capsys.readouterr().out.startswith("FIELD_SPEC_NOT_VALID")


def test_reducible_input_is_unsupported(capsys):
    assert main(["semigroup", "X*Y", "--field", "GF(7)"]) == EXIT_UNSUPPORTED


def test_missing_argument_is_unsupported(capsys):
    assert main(["check", "delgado", "Y^2-X^3", "--field", "GF(7)"]) == EXIT_UNSUPPORTED


def test_escalates_extension_for_roots(capsys):
    assert main(["prepare", "3*Y^2-X^3", "--field", "GF(7)", "--json"]) == EXIT_OK
    prepared = json.loads(capsys.readouterr().out)
    assert prepared["weierstrass"]
    assert prepared["degree"] == 2


def test_key_check(capsys):
    assert main(["check", "key", "Y^2-X^3", "--field", "GF(7)", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert report["threshold"] == 7


def test_key_check_wild_is_unsupported(capsys):
    assert main(["check", "key", "Y^3-X^10", "--field", "GF(5)"]) == EXIT_UNSUPPORTED


def test_milnor_formula_from_file(tmp_path, capsys):
    factors = tmp_path / "factors.txt"
    factors.write_text("Y-X^2\nY+X^2\n", encoding="utf-8")
    assert main(["check", "milnor-formula", "--factors", str(factors), "--field", "GF(7)", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["equal"]
    assert report["two_delta_plus"] == 3


def test_param_output(capsys):
    assert main(["param", "Y^2-X^3", "--field", "GF(7)", "--json", "--prec", "12"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["multiplicity_sequence"] == [2, 1, 1]
    assert out["order_pair"] == [2, 3]


def test_corpus_with_wrong_expectation(tmp_path, capsys):
    corpus = tmp_path / "corpus.jsonl"
    corpus.write_text(
        '{"name": "cusp", "field": "GF(7)", "expr": "Y^2-X^3", "expected": {"mu": 3}}\n',
        encoding="utf-8",
    )
    assert main(["corpus", "--corpus", str(corpus), "--workers", "1"]) == EXIT_FALSIFIED
    assert "mu expected 3 found 2" in capsys.readouterr().out
