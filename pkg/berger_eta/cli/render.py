"""
Output rendering for the command line: markdown tables, CSV and JSON.

All rationals leave as "p/q" strings. Column order and header names are
fixed so rendered output is byte-stable.
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from berger_eta.algebra.exact_arith import format_rational
from berger_eta.services.models import VerificationReport

TABLE_COLUMNS = ["dim", "n", "c", "eta", "zeta"]
TABLE_HEADERS = ["dim", "n", "c_n", "eta_n", "zeta(0)"]

ANOMALY_COLUMNS = ["n", "zeta"]
ANOMALY_HEADERS = ["n", "zeta(0)"]


def _text(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else format_rational(value)


def table_rows(report: VerificationReport, include_odd: bool = False) -> List[Dict[str, Any]]:
    """One row per Berger sphere, ordered by n."""
    rows = []
    for record in report.coefficients:
        if record.n % 2 and not include_odd:
            continue
        rows.append({
            "dim": record.dim,
            "n": record.n,
            "c": format_rational(record.c),
            "eta": _text(record.eta),
            "zeta": _text(record.anomaly),
        })
    return rows


def anomaly_rows(report: VerificationReport) -> List[Dict[str, Any]]:
    """One row per round even sphere S^n, n >= 4."""
    return [
        {"n": record.n, "zeta": _text(record.anomaly)}
        for record in report.coefficients
        if record.n % 2 == 0 and record.anomaly is not None
    ]


def verification_summary(report: VerificationReport) -> Dict[str, Any]:
    return {
        "routes_ok": report.routes_ok,
        "golden_c_ok": report.golden_c_ok,
        "golden_zeta_ok": report.golden_zeta_ok,
        "homogeneity_ok": report.homogeneity_ok,
        "golden_c_matched": report.golden_c_matched,
        "golden_c_compared": report.golden_c_compared,
        "golden_zeta_matched": report.golden_zeta_matched,
        "golden_zeta_compared": report.golden_zeta_compared,
        "rho_samples": [format_rational(r) for r in report.rho_samples],
        "first_failure": report.first_failure,
    }


def render_markdown(rows: List[Dict[str, Any]], columns: List[str], headers: List[str]) -> str:
    lines = [
        "| " + " | ".join(headers) + " |",
        "|" + "|".join("---:" for _ in headers) + "|",
    ]
    for row in rows:
        cells = ["" if row[col] is None else str(row[col]) for col in columns]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_csv(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if row[col] is None else row[col] for col in columns])
    return buffer.getvalue()


def render_json(payload: Dict[str, Any]) -> str:
    """Stable JSON: insertion-ordered keys, two-space indent, trailing newline."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def build_payload(
    report: VerificationReport,
    rho: Fraction,
    rows: List[Dict[str, Any]]
) -> Dict[str, Any]:
    return {
        "max_n": report.max_n,
        "rho": format_rational(rho),
        "rows": rows,
        "verification": verification_summary(report),
    }


def render_verification_text(report: VerificationReport) -> str:
    """Human-readable per-n agreement listing plus summary lines."""
    lines = []
    for record in report.coefficients:
        status = "agree" if record.agreed else "DISAGREE"
        lines.append(f"n={record.n:<3} S^{record.dim:<3} c={format_rational(record.c)}  {status}")

    if report.routes_ok:
        lines.append(f"routes agree for all n ≤ {report.max_n}")
    else:
        lines.append(f"routes disagree for some n ≤ {report.max_n}")
    lines.append(
        f"{report.golden_c_matched}/{report.golden_c_compared} golden c-values match, "
        f"{report.golden_zeta_matched}/{report.golden_zeta_compared} zeta values match"
    )
    rhos = ", ".join(format_rational(r) for r in report.rho_samples)
    verdict = "holds" if report.homogeneity_ok else "fails"
    lines.append(f"homogeneity {verdict} for rho in {{{rhos}}}")
    if not report.ok:
        lines.append(f"FAILED: {report.first_failure}")
    return "\n".join(lines) + "\n"

