import json
import math

import pytest

from utils.errors import DomainError, OutputError
from utils.formatting import (
    csv_lines, csv_row, fmt_float, format_error, format_record, format_report, format_report_json, write_text,
)
from utils.schemas import CaseStatus, CheckCase, CheckReport, EvalResult


@pytest.mark.parametrize("value,text", [
    (0.0, "0"),
    (0.1, "0.10000000000000001"),
    (math.nan, "nan"),
    (math.inf, "inf"),
    (-math.inf, "-inf"),
])
def test_fmt_float(value, text):
    assert fmt_float(value) == text


def test_text_record():
    assert format_record(1.0, EvalResult(2.5, 0.0, 7)) == "x=1 value=2.5 est_error=0 work=7\n"


def test_json_record():
    data = json.loads(format_record(0.5, EvalResult(1.0, 1e-16, 3), as_json=True))
    assert list(data) == ["x", "value", "est_error", "work"]
    assert data["work"] == 3


def test_error_message():
    assert format_error(DomainError("x must be positive")) == "DomainError: x must be positive"


def test_csv_rows():
    rows = [["x", "value"], csv_row(1.0, EvalResult(2.0, 0.0, 1)), csv_row(2.0, DomainError("bad"), "alpha=1")]
    text = csv_lines(rows)
    lines = text.split("\n")
    assert lines[1] == "1,2,0,1"
    assert lines[2] == "alpha=1,2,nan,nan,0"
    assert text.endswith("\n")
    assert "\r" not in text


def _report() -> CheckReport:
    return CheckReport("tables", [
        CheckCase("iml(1,1)", "Ei - γ - ln x", 1e-15, 1e-9, CaseStatus.PASS),
        CheckCase("iml(2,1)", "closed form", 1e-3, 1e-9, CaseStatus.FAIL),
        CheckCase("relation", "diagnostic", 0.1, 0.0, CaseStatus.INFO, "reported only"),
    ])


def test_text_report():
    text = format_report(_report())
    lines = text.splitlines()
    assert lines[0] == "suite: tables"
    assert lines[1].startswith("PASS  iml(1,1)")
    assert "[reported only]" in lines[3]
    assert "1 PASS, 1 FAIL, 1 INFO, 0 ERROR" in text
    assert lines[-1] == "failing: iml(2,1)"


def test_json_report():
    data = json.loads(format_report_json(_report()))
    assert data["suite"] == "tables"
    assert [c["status"] for c in data["cases"]] == ["PASS", "FAIL", "INFO"]
    assert set(data["cases"][0]) == {"id", "paper_ref", "max_rel_err", "tol", "status"}


def test_json_report_nan_is_null():
    report = CheckReport("laplace", [CheckCase("x", "y", math.nan, 1e-9, CaseStatus.ERROR, "NoConvergence: ...")])
    assert json.loads(format_report_json(report))["cases"][0]["max_rel_err"] is None


@pytest.mark.asyncio
async def test_write_text_replaces_atomically(tmp_path):
    target = tmp_path / "out.csv"
    target.write_text("old\n")
    await write_text(target, "x,value\n1,2\n")
    assert target.read_bytes() == b"x,value\n1,2\n"
    assert not (tmp_path / ".out.csv.tmp").exists()


@pytest.mark.asyncio
async def test_write_text_missing_directory(tmp_path):
    with pytest.raises(OutputError) as info:
        await write_text(tmp_path / "missing" / "out.csv", "x\n")
    assert isinstance(info.value, OSError)
    assert info.value.exit_code == 74
