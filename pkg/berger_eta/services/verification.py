"""
Verification suite: route agreement, golden tables and homogeneity in rho.

Failures are collected into the report rather than raised, so one run
describes everything that went wrong up to max_n.
"""

from fractions import Fraction
from typing import Iterable, List, Optional

from loguru import logger

from berger_eta.algebra.exact_arith import as_rational, format_rational, pow_int
from berger_eta.algebra.power_series import coefficient
from berger_eta.core.exceptions import InvalidInputError
from berger_eta.services.eta_engine import DEFAULT_SERIES_MARGIN, weingart_series
from berger_eta.services.models import EtaCoefficient, VerificationReport
from berger_eta.services.reference_tables import ReferenceTables
from berger_eta.workers.pool import compute_coefficients


def _check_routes(report: VerificationReport) -> None:
    for record in report.coefficients:
        if not record.agreed:
            report.routes_ok = False
            report.record_failure(
                f"routes disagree at n={record.n}: "
                f"{format_rational(record.c_weingart)}, {format_rational(record.c_habel)}, "
                f"{format_rational(record.c_bernoulli)}, {format_rational(record.c_dnumber)}"
            )
        elif record.n % 2 and record.c_weingart != 0:
            report.routes_ok = False
            report.record_failure(f"c_{record.n} should vanish for odd n, got {format_rational(record.c)}")


def _check_golden(report: VerificationReport, tables: ReferenceTables) -> None:
    by_n = {record.n: record for record in report.coefficients}

    for n, expected in sorted(tables.c_values.items()):
        record = by_n.get(n)
        if record is None:
            continue
        report.golden_c_compared += 1
        if record.c_weingart == expected:
            report.golden_c_matched += 1
        else:
            report.golden_c_ok = False
            report.record_failure(
                f"c_{n} = {format_rational(record.c_weingart)} "
                f"but reference table has {format_rational(expected)}"
            )

    for n, expected in sorted(tables.zeta_values.items()):
        record = by_n.get(n)
        if record is None:
            continue
        report.golden_zeta_compared += 1
        if record.anomaly == expected:
            report.golden_zeta_matched += 1
        else:
            report.golden_zeta_ok = False
            actual = "undefined" if record.anomaly is None else format_rational(record.anomaly)
            report.record_failure(
                f"zeta(0) on S^{n} = {actual} but reference table has {format_rational(expected)}"
            )


def _check_homogeneity(
    report: VerificationReport,
    rho_samples: List[Fraction],
    series_margin: int
) -> None:
    by_n = {record.n: record for record in report.coefficients if record.agreed}
    top = report.max_n

    for rho in rho_samples:
        if rho == 0:
            logger.warning("Skipping generating-function recomputation at rho = 0")
            continue

        series = weingart_series(top + series_margin, rho)
        if series.coefficients[0] != 1:
            report.homogeneity_ok = False
            report.record_failure(
                f"generating function at rho={format_rational(rho)} starts at "
                f"{format_rational(series.coefficients[0])}, expected 1/1"
            )
            continue

        for n in range(2, top + 1):
            record = by_n.get(n)
            if record is None:
                continue
            substituted = 2 * coefficient(series, n)
            expected = record.c * pow_int(rho, n)  # eta_n at this rho
            if substituted != expected:
                report.homogeneity_ok = False
                report.record_failure(
                    f"homogeneity fails at n={n}, rho={format_rational(rho)}: "
                    f"{format_rational(substituted)} != {format_rational(expected)}"
                )


def verify_all(
    max_n: int,
    rho_samples: Iterable = (1,),
    tables: Optional[ReferenceTables] = None,
    workers: int = 1,
    series_margin: int = DEFAULT_SERIES_MARGIN
) -> VerificationReport:
    """
    Run every check up to max_n.

    Args:
        max_n: Highest n, at least 2
        rho_samples: Squashing values for the homogeneity check; the first is
            also used for the eta values stored in the report
        tables: Golden tables, embedded ones when None
        workers: Processes for the per-n fan-out
        series_margin: Working-order margin for the generating-function route

    Returns:
        VerificationReport
    """
    if max_n < 2:
        raise InvalidInputError(f"max_n must be >= 2, got {max_n}")

    rhos = [as_rational(r) for r in rho_samples] or [Fraction(1)]
    tables = tables or ReferenceTables()

    logger.info(f"Verifying n = 2..{max_n} with rho samples {[format_rational(r) for r in rhos]}")
    records: List[EtaCoefficient] = compute_coefficients(
        range(2, max_n + 1), rho=rhos[0], workers=workers, series_margin=series_margin
    )

    report = VerificationReport(max_n=max_n, rho_samples=rhos, coefficients=records)
    _check_routes(report)
    _check_golden(report, tables)
    _check_homogeneity(report, rhos, series_margin)

    if report.ok:
        logger.info(
            f"Verification passed: {report.golden_c_matched}/{report.golden_c_compared} c-values, "
            f"{report.golden_zeta_matched}/{report.golden_zeta_compared} zeta values"
        )
    else:
        logger.error(f"Verification failed: {report.first_failure}")
    return report
