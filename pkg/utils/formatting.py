"""
Output formatting for specint
Fixed-width float rendering, eval records, CSV rows and check reports
"""
import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Iterable, List, Optional, Union

import aiofiles
import aiofiles.os

from .errors import OutputError, SpecialFunctionError
from .schemas import CaseStatus, CheckReport, EvalResult

logger = logging.getLogger(__name__)

CSV_HEADER = ["x", "value", "est_error", "work"]
PRESET_CSV_HEADER = ["label"] + CSV_HEADER


def fmt_float(value: float) -> str:
    """%.17g, with nan/inf spelled the same on every platform"""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return "%.17g" % value


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_json_safe(v) for v in value]
    return value


def to_json(data: Any) -> str:
    """Deterministic JSON: insertion order, NaN/inf as null"""
    return json.dumps(_json_safe(data), indent=2, ensure_ascii=False)


def format_record(x: float, result: EvalResult, as_json: bool = False) -> str:
    """
    Render one evaluation

    Args:
        x: the abscissa that was evaluated
        result: the EvalResult
        as_json: emit a JSON object instead of key=value text

    Returns:
        str: formatted record, newline-terminated
    """
    if as_json:
        return to_json({'x': x, **result.to_dict()}) + "\n"
    return (f"x={fmt_float(x)} value={fmt_float(result.value)} "
            f"est_error={fmt_float(result.est_error)} work={result.work}\n")


def format_error(error: SpecialFunctionError) -> str:
    """<ClassName>: <message>"""
    return f"{type(error).__name__}: {error}"


def csv_lines(rows: Iterable[List[str]]) -> str:
    """Rows joined with commas and LF line endings"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def csv_row(x: float, outcome, label: Optional[str] = None) -> List[str]:
    """One CSV row; an error outcome prints nan for value and est_error"""
    if isinstance(outcome, EvalResult):
        cells = [fmt_float(x), fmt_float(outcome.value), fmt_float(outcome.est_error), str(outcome.work)]
    else:
        cells = [fmt_float(x), "nan", "nan", "0"]
    return [label] + cells if label is not None else cells


def format_report(report: CheckReport) -> str:
    """
    Plain-text check report

    One line per case (status, id, max relative error, tolerance, reference),
    then a summary naming failing case ids.
    """
    lines = [f"suite: {report.suite}"]
    width = max((len(c.id) for c in report.cases), default=0)
    for case in report.cases:
        line = (f"{case.status.value:<5} {case.id:<{width}}  max_rel_err={fmt_float(case.max_rel_err)}"
                f"  tol={fmt_float(case.tol)}  {case.reference}")
        if case.note:
            line += f"  [{case.note}]"
        lines.append(line)
    counts = {status: sum(1 for c in report.cases if c.status is status) for status in CaseStatus}
    lines.append(", ".join(f"{counts[s]} {s.value}" for s in CaseStatus))
    if report.failures:
        lines.append("failing: " + " ".join(c.id for c in report.failures))
    return "\n".join(lines) + "\n"


def format_report_json(report: CheckReport) -> str:
    return to_json(report.to_dict()) + "\n"


async def write_text(path: Union[str, Path], text: str):
    """
    Write output through a temporary file and an atomic replace

    Args:
        path: destination file
        text: full file contents

    Raises:
        OutputError: the destination or its temporary file cannot be written
    """
    path = Path(path)
    temp_path = path.with_name(f".{path.name}.tmp")
    try:
        async with aiofiles.open(temp_path, 'w', encoding='utf-8', newline='\n') as file:
            await file.write(text)
        await aiofiles.os.replace(temp_path, path)
    except OSError as e:
        if await aiofiles.os.path.exists(temp_path):
            await aiofiles.os.remove(temp_path)
        raise OutputError(f"cannot write {path}: {e.strerror or e}") from e
    logger.info(f"wrote {len(text)} characters to {path}")
