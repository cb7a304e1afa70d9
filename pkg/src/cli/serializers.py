"""
表格与校验报告的序列化

所有数值都按精确形式输出："p/q"（既约，q > 0），整数不带 "/1"。
JSON 中的数值同样以字符串表示，避免大整数与有理数失真。
"""

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from src.exact_arith import format_rational
from src.identities import IdentityReport
from src.identities.runner import VerifySummary
from src.polynomials.polynomial import Polynomial

from . import OutputFormat, TableFamily


@dataclass(frozen=True)
class TableData:
    family: TableFamily
    max_n: int
    rows: Tuple[Tuple[Fraction, ...], ...]
    """第 n 行的值，数列每行恰有一个值"""


def serialize_value(value: Any) -> str:
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, (tuple, list)):
        return "[" + ", ".join(serialize_value(v) for v in value) + "]"
    return str(value)


def _params_text(params: Dict[str, int]) -> str:
    return ";".join(f"{key}={serialize_value(value)}" for key, value in params.items())


def _dump_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# ---------------------------------------------------------------- 表格


def table_to_text(table: TableData) -> str:
    return "".join(",".join(format_rational(v) for v in row) + "\n" for row in table.rows)


def table_to_csv(table: TableData) -> str:
    if table.family.is_sequence:
        return _dump_csv(["n", "value"], [[str(n), format_rational(row[0])] for n, row in enumerate(table.rows)])
    lines: List[List[str]] = []
    for n, row in enumerate(table.rows):
        lines.extend([str(n), str(k), format_rational(v)] for k, v in enumerate(row))
    return _dump_csv(["n", "k", "value"], lines)


def table_to_json(table: TableData) -> str:
    if table.family.is_sequence:
        rows: List[Any] = [format_rational(row[0]) for row in table.rows]
    else:
        rows = [[format_rational(v) for v in row] for row in table.rows]
    return _dump_json({"family": str(table.family), "params": {"max_n": str(table.max_n)}, "rows": rows})


def render_table(table: TableData, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return table_to_csv(table)
    if fmt is OutputFormat.JSON:
        return table_to_json(table)
    return table_to_text(table)


# ---------------------------------------------------------------- 报告

REPORT_CSV_HEADER = ("id", "range", "params", "checks_performed", "status", "counterexample_params", "lhs", "rhs", "notes")


def report_to_dict(report: IdentityReport) -> Dict[str, Any]:
    counterexample = None
    if report.counterexample is not None:
        counterexample = {
            "params": {key: serialize_value(value) for key, value in report.counterexample.params.items()},
            "lhs": serialize_value(report.counterexample.lhs),
            "rhs": serialize_value(report.counterexample.rhs),
        }
    return {
        "id": str(report.id),
        "range": report.range,
        "params": {key: serialize_value(value) for key, value in report.params.items()},
        "status": str(report.status),
        "checks_performed": str(report.checks_performed),
        "counterexample": counterexample,
        "notes": list(report.notes),
    }


def reports_to_text(reports: Sequence[IdentityReport], summary: VerifySummary) -> str:
    lines: List[str] = []
    for report in reports:
        lines.append(f"{report.id} {report.status} checks={report.checks_performed} range={report.range}")
        if report.counterexample is not None:
            ce = report.counterexample
            lines.append(
                f"    counterexample {_params_text(ce.params)}: "
                f"lhs={serialize_value(ce.lhs)} rhs={serialize_value(ce.rhs)}"
            )
        lines.extend(f"    note: {note}" for note in report.notes)
    status = "pass" if summary.passed else "fail"
    lines.append(
        f"summary: {status} {summary.total - len(summary.failed)}/{summary.total} passed, "
        f"checks={summary.checks_performed}"
    )
    return "\n".join(lines) + "\n"


def reports_to_csv(reports: Sequence[IdentityReport]) -> str:
    rows = []
    for report in reports:
        ce = report.counterexample
        rows.append(
            [
                str(report.id),
                report.range,
                _params_text(report.params),
                str(report.checks_performed),
                str(report.status),
                _params_text(ce.params) if ce else "",
                serialize_value(ce.lhs) if ce else "",
                serialize_value(ce.rhs) if ce else "",
                " | ".join(report.notes),
            ]
        )
    return _dump_csv(REPORT_CSV_HEADER, rows)


def reports_to_json(identity: str, params: Dict[str, int], reports: Sequence[IdentityReport]) -> str:
    return _dump_json(
        {
            "identity": identity,
            "params": {key: serialize_value(value) for key, value in params.items()},
            "reports": [report_to_dict(report) for report in reports],
        }
    )


def render_reports(
    identity: str,
    params: Dict[str, int],
    reports: Sequence[IdentityReport],
    summary: VerifySummary,
    fmt: OutputFormat,
) -> str:
    if fmt is OutputFormat.CSV:
        return reports_to_csv(reports)
    if fmt is OutputFormat.JSON:
        return reports_to_json(identity, params, reports)
    return reports_to_text(reports, summary)
