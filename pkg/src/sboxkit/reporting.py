"""Report serialization: JSON, CSV, markdown and plain-text rendering.

JSON reports embed a run manifest (tool version, subcommand, full parameter
echo, timestamp) sufficient to reproduce the run; everything except the
timestamp is a pure function of the inputs, so repeated runs differ only in
that one field.  CSV numbers are written with 17 significant digits so they
parse back to the identical double.
"""

import datetime
import json

from . import __version__
from .corpus import PUBLISHED_FIELDS
from .metrics import MetricReport


def format_real(x) -> str:
    """17-significant-digit decimal rendering (exact parse round-trip)."""
    return format(float(x), ".17g")


def run_manifest(subcommand: str, parameters: dict) -> dict:
    return {
        "tool": "sboxkit",
        "version": __version__,
        "subcommand": subcommand,
        "parameters": parameters,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def report_to_dict(report: MetricReport) -> dict:
    return {
        "bijective": report.bijective,
        "nl_mode": report.nl_mode.value,
        "nl_min": report.nl_min,
        "nl_max": report.nl_max,
        "nl_avg": report.nl_avg,
        "nl_per_coordinate": [int(v) for v in report.nl_per_coordinate],
        "sac_avg": report.sac_avg,
        "sac_offset": report.sac_offset,
        "sac_matrix": [[float(v) for v in row] for row in report.sac_matrix],
        "bic_nl_avg": report.bic_nl_avg,
        "bic_nl_matrix": [[int(v) for v in row] for row in report.bic_nl_matrix],
        "lp": report.lp,
        "du": report.du,
        "dp": report.dp,
        "du_grid": [[int(v) for v in row] for row in report.du_grid],
        "fixed_point_count": report.fixed_point_count,
        "fixed_points": [int(v) for v in report.fixed_points],
    }


def report_json(report: MetricReport, manifest: dict) -> str:
    payload = {"manifest": manifest, "report": report_to_dict(report)}
    return json.dumps(payload, indent=2) + "\n"


def nl_summary_line(report: MetricReport) -> str:
    return (f"nl min {report.nl_min}  max {report.nl_max}  "
            f"avg {report.nl_avg:g}  ({report.nl_mode.value} mode)")


def render_report_text(report: MetricReport) -> str:
    lines = [
        f"bijective        {'yes' if report.bijective else 'NO'}",
        f"nonlinearity     min {report.nl_min}  max {report.nl_max}  "
        f"avg {report.nl_avg:g}  ({report.nl_mode.value} mode)",
        "per output bit   " + " ".join(str(v) for v in report.nl_per_coordinate),
        f"SAC              avg {report.sac_avg:.6f}  offset {report.sac_offset:.6f}",
        f"BIC-NL           avg {report.bic_nl_avg:g}",
        f"LP               {report.lp:g}",
        f"DU / DP          {report.du} / {report.dp:g}",
        f"fixed points     {report.fixed_point_count}"
        + (f"  at {list(report.fixed_points)}" if report.fixed_points else ""),
        "",
        "SAC dependency matrix:",
    ]
    for row in report.sac_matrix:
        lines.append("  " + " ".join(f"{v:.4f}" for v in row))
    lines.append("")
    lines.append("BIC-NL matrix:")
    for row in report.bic_nl_matrix:
        lines.append("  " + " ".join(f"{int(v):3d}" for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Comparison table rendering

_COLUMNS = PUBLISHED_FIELDS


def _row_values(row) -> dict:
    if row.error is not None:
        return {}
    if row.published_only:
        return dict(row.published or {})
    r = row.report
    return {
        "nl_min": r.nl_min, "nl_max": r.nl_max, "nl_avg": r.nl_avg,
        "sac": r.sac_avg, "sac_offset": r.sac_offset, "bic_nl": r.bic_nl_avg,
        "lp": r.lp, "dp": r.dp, "fp": r.fixed_point_count,
    }


def _cell(value, decimals=4) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    return f"{value:.{decimals}g}" if abs(value) < 1 else f"{value:g}"


def comparison_markdown(rows) -> str:
    header = "| S-box | " + " | ".join(_COLUMNS) + " | published | note |"
    rule = "|" + "---|" * (len(_COLUMNS) + 3)
    lines = [header, rule]
    for row in rows:
        if row.error is not None:
            cells = ["error: " + row.error] + ["-"] * (len(_COLUMNS) - 1)
        else:
            values = _row_values(row)
            cells = [_cell(values.get(name)) for name in _COLUMNS]
        lines.append(
            "| " + row.label + " | " + " | ".join(cells) + " | "
            + ("yes" if row.published_only else "no") + " | "
            + (row.note or "") + " |"
        )
    delta_lines = deltas_section(rows)
    if delta_lines:
        lines.append("")
        lines.extend(delta_lines)
    return "\n".join(lines) + "\n"


def comparison_csv(rows) -> str:
    lines = ["id," + ",".join(_COLUMNS) + ",published,error"]
    for row in rows:
        values = _row_values(row)
        cells = []
        for name in _COLUMNS:
            v = values.get(name)
            if v is None:
                cells.append("")
            elif isinstance(v, int):
                cells.append(str(v))
            else:
                cells.append(format_real(v))
        lines.append(",".join([row.id] + cells
                              + ["yes" if row.published_only else "no",
                                 row.error or ""]))
    return "\n".join(lines) + "\n"


def deltas_section(rows) -> list:
    """Computed-versus-published lines for rows that have both."""
    lines = []
    for row in rows:
        if not row.deltas:
            continue
        lines.append(f"deltas for {row.id} (computed vs published):")
        for d in row.deltas:
            mark = "match" if d["match"] else "MISMATCH"
            lines.append(
                f"  {d['metric']:<10} computed {_cell(d['computed'], 6):>10}  "
                f"published {_cell(d['published'], 6):>10}  {mark}"
            )
    return lines
