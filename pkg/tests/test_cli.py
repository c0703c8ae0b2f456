import asyncio
import json

import pytest

import specint
from utils.check_manager import CheckManager


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("SPECINT_REL_TOL", raising=False)
    monkeypatch.delenv("SPECINT_MAX_TERMS", raising=False)


def run(*argv: str) -> int:
    return asyncio.run(specint.run(list(argv)))


def _fields(line: str) -> dict:
    return dict(part.split("=", 1) for part in line.split())


class TestEval:
    def test_integral_exponential(self, capsys):
        assert run("eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x", "1") == 0
        fields = _fields(capsys.readouterr().out.strip())
        assert float(fields["value"]) == pytest.approx(1.3179021514544038, rel=1e-13)
        assert float(fields["est_error"]) < 1e-12
        assert int(fields["work"]) > 0

    def test_origin(self, capsys):
        assert run("eval", "--fn", "iml", "--alpha", "0.5", "--beta", "2", "--x", "0") == 0
        fields = _fields(capsys.readouterr().out.strip())
        assert fields["value"] == "0"
        assert fields["work"] == "0"

    def test_json(self, capsys):
        assert run("eval", "--fn", "Si", "--x", "1", "--json") == 0
        data = json.loads(capsys.readouterr().out)
        assert list(data) == ["x", "value", "est_error", "work"]
        assert data["value"] == pytest.approx(0.946083070367183, rel=1e-13)

    def test_rational_and_fraction_arguments(self, capsys):
        assert run("eval", "--fn", "iml", "--p", "3", "--q", "2", "--beta", "1/2", "--x", "2") == 0
        by_ratio = float(_fields(capsys.readouterr().out)["value"])
        assert run("eval", "--fn", "iml", "--alpha", "3/2", "--beta", "0.5", "--x", "2") == 0
        by_alpha = float(_fields(capsys.readouterr().out)["value"])
        assert by_ratio == pytest.approx(by_alpha, rel=1e-10)

    def test_missing_argument_is_usage(self, capsys):
        assert run("eval", "--fn", "iml", "--alpha", "1", "--beta", "1") == 64
        assert "usage" in capsys.readouterr().err

    def test_unknown_command_is_usage(self):
        assert run("plot") == 64

    def test_domain_error(self, capsys):
        assert run("eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x=-1") == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "DomainError:" in captured.err

    def test_half_rational(self, capsys):
        assert run("eval", "--fn", "iml", "--p", "3", "--beta", "1", "--x", "1") == 2
        assert "InvalidParams" in capsys.readouterr().err

    def test_overflow(self, capsys):
        assert run("eval", "--fn", "ml", "--alpha", "0.25", "--beta", "1", "--x", "30") == 3
        assert "RangeOverflow:" in capsys.readouterr().err

    def test_term_cap(self, capsys):
        assert run("eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x", "10", "--max-terms", "5") == 3
        assert "NoConvergence:" in capsys.readouterr().err

    def test_term_cap_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("SPECINT_MAX_TERMS", "5")
        assert run("eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x", "10") == 3

    def test_invalid_tolerance(self, capsys):
        assert run("eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x", "1", "--rel-tol", "0") == 2


class TestGrid:
    def test_rows(self, capsys):
        assert run("grid", "--fn", "ml", "--alpha", "1", "--beta", "1", "--min", "0", "--max", "1",
                   "--points", "50") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "x,value,est_error,work"
        assert len(lines) == 51
        assert lines[1].startswith("0,1,")
        assert lines[-1].startswith("1,2.718281828459045")

    def test_log_spacing(self, capsys):
        assert run("grid", "--fn", "Si", "--min", "0.1", "--max", "10", "--points", "3", "--spacing", "log") == 0
        xs = [float(line.split(",")[0]) for line in capsys.readouterr().out.splitlines()[1:]]
        assert xs == pytest.approx([0.1, 1.0, 10.0], rel=1e-14)

    def test_preset(self, capsys):
        assert run("grid", "--fig", "ei-alpha", "--points", "5") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "label,x,value,est_error,work"
        assert len(lines) == 1 + 5 * 5
        assert lines[1].startswith("alpha=0.25,0.01,")

    def test_incomplete_usage(self):
        assert run("grid", "--fn", "ml", "--alpha", "1", "--beta", "1", "--min", "0", "--max", "1") == 64

    def test_failing_rows_keep_going(self, capsys):
        assert run("grid", "--fn", "iml", "--alpha", "1", "--beta", "1", "--min=-1", "--max", "1",
                   "--points", "3") == 2
        lines = capsys.readouterr().out.splitlines()
        assert lines[1] == "-1,nan,nan,0"
        assert lines[2] == "0,0,0,0"
        assert len(lines) == 4

    def test_bad_grid(self, capsys):
        assert run("grid", "--fn", "Si", "--min", "1", "--max", "0", "--points", "3") == 2

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "grid.csv"
        assert run("grid", "--fn", "Si", "--min", "0", "--max", "1", "--points", "2", "--output", str(target)) == 0
        assert capsys.readouterr().out == ""
        assert target.read_text().splitlines()[0] == "x,value,est_error,work"

    def test_output_directory_missing(self, tmp_path, capsys):
        target = tmp_path / "missing" / "x.csv"
        assert run("grid", "--fn", "Si", "--min", "0", "--max", "1", "--points", "2", "--output", str(target)) == 74
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "OutputError:" in captured.err
        assert not target.parent.exists()


class TestCheck:
    def test_relation_suite(self, capsys):
        assert run("check", "--suite", "eq19") == 0
        out = capsys.readouterr().out
        assert out.startswith("suite: eq19")
        assert "0 FAIL" in out

    def test_json_report(self, capsys):
        assert run("check", "--suite", "eq19", "--report", "json") == 0
        data = json.loads(capsys.readouterr().out)
        assert data["suite"] == "eq19"
        assert set(data["cases"][0]) == {"id", "paper_ref", "max_rel_err", "tol", "status"}
        assert all(case["status"] == "INFO" for case in data["cases"])

    def test_relation_alias(self, capsys):
        assert run("check", "--suite", "relation", "--json") == 0
        assert json.loads(capsys.readouterr().out)["suite"] == "eq19"

    def test_tables_suite(self, capsys):
        assert run("check", "--suite", "tables") == 0

    def test_unverified_rows_are_reported_not_failed(self, capsys):
        assert run("check", "--suite", "tables", "--include-unverified", "--json") == 0
        cases = json.loads(capsys.readouterr().out)["cases"]
        printed = [c for c in cases if c["id"].endswith(":printed")]
        assert printed
        assert all(c["status"] == "INFO" for c in printed)

    def test_report_to_missing_directory(self, tmp_path, capsys):
        target = tmp_path / "missing" / "report.json"
        assert run("check", "--suite", "eq19", "--json", "--output", str(target)) == 74
        assert "OutputError:" in capsys.readouterr().err

    def test_all_suite_is_byte_identical_across_runs(self, capsys):
        assert run("check", "--suite", "all", "--report", "json") == 0
        first = capsys.readouterr().out
        assert run("check", "--suite", "all", "--report", "json") == 0
        second = capsys.readouterr().out
        assert first == second
        # gather keeps the registration order of the cases
        ids = [case["id"] for case in json.loads(first)["cases"]]
        assert ids == [spec.id for spec in CheckManager().build("all")]

    def test_unknown_suite_is_usage(self):
        assert run("check", "--suite", "everything") == 64
