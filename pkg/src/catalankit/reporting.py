"""Comparison reports and their text/json/csv renderings.

Every CLI command emits a CompareReport: an input echo, one row per
representation, the maximum pairwise relative difference among rows
eligible for comparison, and free-form notes. Rendering is byte
deterministic: floats always print with 17 significant digits (which
round-trips float64 exactly), rationals print as num/den, JSON keys are
sorted, and no timestamps or environment data appear anywhere.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "RepRow",
    "CompareReport",
    "max_pairwise_rel_diff",
    "format_float",
    "format_scalar",
    "render_report",
]


def format_float(x: float) -> str:
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def format_scalar(x) -> str:
    """Value as text: rationals exact, floats at 17 significant digits."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (str, Fraction, int)):
        return str(x)
    return format_float(x)


@dataclass(frozen=True)
class RepRow:
    """One representation's outcome inside a report.

    ``terms`` counts series terms or integrand evaluations, whichever
    applies. ``skipped`` marks a domain violation (the reason goes in
    ``note``); ``compare=False`` keeps a row out of the pairwise
    difference, for values that are reported but not asserted.
    """

    rep: str
    value: object = None  # Fraction | float | None
    err: float | None = None
    exact: bool = False
    terms: int | None = None
    note: str = ""
    skipped: bool = False
    compare: bool = True


def max_pairwise_rel_diff(values) -> float | None:
    """Largest |v_i - v_j| / max(|v_i|, |v_j|); None for fewer than 2 values."""
    vals = list(values)
    if len(vals) < 2:
        return None
    if all(isinstance(v, (int, Fraction)) for v in vals) and len(set(vals)) == 1:
        return 0.0  # exact agreement, no float conversion (values may be huge)
    vals = [float(v) for v in vals]
    worst = 0.0
    for i, vi in enumerate(vals):
        for vj in vals[i + 1 :]:
            scale = max(abs(vi), abs(vj))
            if scale > 0:
                worst = max(worst, abs(vi - vj) / scale)
    return worst


@dataclass(frozen=True)
class CompareReport:
    command: str
    inputs: tuple[tuple[str, object], ...]  # echoed in the given order
    rows: tuple[RepRow, ...]
    notes: tuple[str, ...] = ()

    @property
    def compared_rows(self) -> tuple[RepRow, ...]:
        return tuple(r for r in self.rows if r.compare and not r.skipped)

    @property
    def max_pairwise_rel_diff(self) -> float | None:
        return max_pairwise_rel_diff([r.value for r in self.compared_rows])

    def within(self, tol: float) -> bool:
        diff = self.max_pairwise_rel_diff
        return diff is None or diff <= tol


def _json_atom(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return json.dumps(str(x))
    if isinstance(x, float):
        return format_float(x)
    return json.dumps(str(x))


def _json_object(pairs) -> str:
    body = ",".join(f"{json.dumps(k)}:{v}" for k, v in sorted(pairs))
    return "{" + body + "}"


def _row_json(row: RepRow) -> str:
    return _json_object(
        [
            ("rep", _json_atom(row.rep)),
            ("value", _json_atom(row.value)),
            ("err", _json_atom(row.err)),
            ("exact", _json_atom(row.exact)),
            ("terms", _json_atom(row.terms)),
            ("note", _json_atom(row.note)),
            ("skipped", _json_atom(row.skipped)),
        ]
    )


def _report_json(report: CompareReport) -> str:
    results = "[" + ",".join(_row_json(r) for r in report.rows) + "]"
    notes = "[" + ",".join(_json_atom(n) for n in report.notes) + "]"
    return _json_object(
        [
            ("command", _json_atom(report.command)),
            ("input", _json_object([(k, _json_atom(v)) for k, v in report.inputs])),
            ("results", results),
            ("max_pairwise_rel_diff", _json_atom(report.max_pairwise_rel_diff)),
            ("notes", notes),
        ]
    )


def _report_text(report: CompareReport) -> str:
    lines = []
    echo = " ".join(f"{k}={format_scalar(v)}" for k, v in report.inputs)
    lines.append(f"{report.command}  {echo}".rstrip())
    header = ("rep", "value", "err", "exact", "terms", "note")
    table = [header]
    for r in report.rows:
        table.append(
            (
                r.rep,
                "skipped" if r.skipped else format_scalar(r.value),
                "" if r.err is None else format_float(r.err),
                "yes" if r.exact else ("" if r.skipped else "no"),
                "" if r.terms is None else str(r.terms),
                r.note,
            )
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    for row in table:
        rendered = "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        lines.append(rendered)
    diff = report.max_pairwise_rel_diff
    if diff is not None:
        lines.append(f"max_pairwise_rel_diff {format_float(diff)}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _report_csv(report: CompareReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["rep", "value", "err", "exact", "terms", "note", "skipped"])
    for r in report.rows:
        writer.writerow(
            [
                r.rep,
                format_scalar(r.value),
                "" if r.err is None else format_float(r.err),
                "true" if r.exact else "false",
                "" if r.terms is None else r.terms,
                r.note,
                "true" if r.skipped else "false",
            ]
        )
    return out.getvalue().rstrip("\n")


def render_report(report: CompareReport, fmt: str) -> str:
    if fmt == "json":
        return _report_json(report)
    if fmt == "csv":
        return _report_csv(report)
    if fmt == "text":
        return _report_text(report)
    raise ValueError(f"unknown format {fmt!r}")
