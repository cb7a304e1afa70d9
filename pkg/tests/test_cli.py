import csv
import io
import json

import pytest

from src import __version__
from src.cli import EXIT_IDENTITY_FAILED, EXIT_OK, EXIT_USAGE
from src.cli.parser import main
from src.exact_arith import parse_rational
from src.identities import bernoulli_checks


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_unsigned_first_kind_table():
    code, text = run("table", "stirling1u", "--max-n", "3")
    assert code == EXIT_OK
    assert text.splitlines()[-1] == "0,2,3,1"
    assert len(text.splitlines()) == 4


def test_family_as_option():
    assert run("table", "--family", "stirling2", "--max-n", "4") == run("table", "stirling2", "--max-n", "4")


def test_second_kind_bernoulli_table():
    code, text = run("table", "bernoulli2", "--max-n", "2")
    assert code == EXIT_OK
    assert text == "1\n1/2\n-1/6\n"


def test_single_row_table():
    assert run("table", "bernoulli1", "--max-n", "0") == (EXIT_OK, "1\n")


def test_bernoulli_polynomial_coefficients_low_to_high():
    code, text = run("table", "bernpoly", "--max-n", "2")
    assert code == EXIT_OK
    assert text.splitlines() == ["1", "-1/2,1", "1/6,-1,1"]


def test_table_csv():
    code, text = run("table", "stirling1", "--max-n", "2", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "k", "value"]
    assert rows[1:] == [["0", "0", "1"], ["1", "0", "0"], ["1", "1", "1"], ["2", "0", "0"], ["2", "1", "-1"], ["2", "2", "1"]]


def test_sequence_csv_and_json_agree():
    _, csv_text = run("table", "bernoulli1", "--max-n", "12", "--format", "csv")
    _, json_text = run("table", "bernoulli1", "--max-n", "12", "--format", "json")
    rows = list(csv.DictReader(io.StringIO(csv_text)))
    payload = json.loads(json_text)
    assert payload["family"] == "bernoulli1"
    assert payload["params"] == {"max_n": "12"}
    assert [row["value"] for row in rows] == payload["rows"]
    assert parse_rational(payload["rows"][12]) == parse_rational("-691/2730")


def test_triangle_csv_and_json_agree():
    _, csv_text = run("table", "stirling2", "--max-n", "8", "--format", "csv")
    _, json_text = run("table", "stirling2", "--max-n", "8", "--format", "json")
    triangle = json.loads(json_text)["rows"]
    for row in csv.DictReader(io.StringIO(csv_text)):
        assert triangle[int(row["n"])][int(row["k"])] == row["value"]
    assert sum(len(row) for row in triangle) == 45


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "stirling3", "--max-n", "3"),
        ("table", "stirling1", "--max-n", "x"),
        ("table", "stirling1", "--max-n", "-1"),
        ("table", "stirling1", "--format", "xml"),
        ("table",),
        ("table", "stirling1", "--family", "stirling2"),
        ("verify", "--identity", "T5", "--max-r", "0"),
        ("verify", "--identity", "EQ99"),
        ("verify", "--max-n", "0"),
        ("verify", "--identity", "C6", "--workers", "0"),
        (),
    ],
)
def test_usage_errors_exit_with_two(argv):
    code, text = run(*argv)
    assert code == EXIT_USAGE
    assert text == ""


def test_verify_single_identity():
    code, text = run("verify", "--identity", "C6", "--max-n", "50")
    assert code == EXIT_OK
    first, summary = text.splitlines()
    assert first.startswith("C6 pass checks=102 ")
    assert summary.startswith("summary: pass 1/1 passed")


def test_verify_all_with_default_bounds():
    code, text = run("verify", "--identity", "all", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["identity"] == "all"
    assert payload["params"]["max_n"] == "40"
    assert len(payload["reports"]) == 26
    assert all(report["status"] == "pass" for report in payload["reports"])


def test_verify_output_is_byte_identical_across_runs():
    argv = ("verify", "--max-n", "10", "--max-r", "3", "--trials", "5", "--seed", "7", "--format", "json")
    assert run(*argv) == run(*argv)


def test_verify_parallel_output_matches_sequential():
    argv = ("verify", "--max-n", "10", "--max-r", "3", "--trials", "5", "--seed", "7")
    assert run(*argv, "--workers", "4") == run(*argv)


def split_params(text):
    return dict(item.split("=", 1) for item in text.split(";")) if text else {}


def test_report_csv_and_json_agree():
    argv = ("verify", "--max-n", "8", "--max-r", "2", "--trials", "3")
    _, csv_text = run(*argv, "--format", "csv")
    _, json_text = run(*argv, "--format", "json")
    rows = list(csv.DictReader(io.StringIO(csv_text)))
    reports = json.loads(json_text)["reports"]
    assert len(rows) == len(reports) == 26
    for row, report in zip(rows, reports):
        assert row["id"] == report["id"]
        assert row["range"] == report["range"]
        assert split_params(row["params"]) == report["params"]
        assert row["checks_performed"] == report["checks_performed"]
        assert row["status"] == report["status"]
        assert row["notes"] == " | ".join(report["notes"])


def test_report_csv_carries_sweep_params():
    argv = ("verify", "--identity", "L1", "--trials", "4", "--max-n", "6", "--seed", "3", "--value-bound", "7")
    code, text = run(*argv, "--format", "csv")
    assert code == EXIT_OK
    (row,) = csv.DictReader(io.StringIO(text))
    assert row["params"] == "trials=4;max_n=6;seed=3;value_bound=7"
    assert split_params(row["params"])["value_bound"] == "7"


def test_counterexample_exits_with_one(monkeypatch):
    broken = list(bernoulli_checks.bernoulli_second_by_series(10))
    broken[3] += 1
    monkeypatch.setattr(bernoulli_checks, "bernoulli_second_by_series", lambda max_n: tuple(broken))

    code, text = run("verify", "--identity", "EQ13", "--max-n", "10")
    assert code == EXIT_IDENTITY_FAILED
    assert "EQ13_INT_FALLING fail" in text
    assert "counterexample n=3: lhs=1/4 rhs=5/4" in text

    code, text = run("verify", "--identity", "EQ13", "--max-n", "10", "--format", "json")
    assert code == EXIT_IDENTITY_FAILED
    counterexample = json.loads(text)["reports"][0]["counterexample"]
    assert counterexample == {"params": {"n": "3"}, "lhs": "1/4", "rhs": "5/4"}


def test_version_flag(capsys):
    code, _ = run("--version")
    assert code == EXIT_OK
    assert __version__ in capsys.readouterr().out
