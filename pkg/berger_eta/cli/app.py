#!/usr/bin/env python3
"""
Command line interface for the Berger sphere eta engine.

Subcommands:
    table      c_n, eta_n(rho) and zeta(0) per sphere
    anomaly    zeta(0) column only
    verify     four-route agreement, golden tables, homogeneity
    series     coefficients of the generating function
    bernoulli  one generalized Bernoulli value

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

import argparse
import re
import sys
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from berger_eta import __version__
from berger_eta.algebra.bernoulli_poly import norlund_bernoulli
from berger_eta.algebra.exact_arith import format_rational, parse_rational
from berger_eta.cli import render
from berger_eta.core.dependencies import EngineDependencies
from berger_eta.core.exceptions import InvalidInputError
from berger_eta.core.settings import Settings, load_settings
from berger_eta.services.eta_engine import weingart_series
from berger_eta.services.verification import verify_all

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


class OutputFormat(str, Enum):
    """Rendering of tabular output."""
    MARKDOWN = "md"
    CSV = "csv"
    JSON = "json"


class CliConfig(BaseModel):
    """Validated options shared by table, anomaly and verify."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    max_n: int = Field(default=40, description="Highest n, even")
    format: OutputFormat = Field(default=OutputFormat.MARKDOWN)
    rho: Fraction = Field(default=Fraction(1), description="Squashing parameter")
    include_odd: bool = False

    @field_validator("max_n")
    @classmethod
    def validate_max_n(cls, v: int) -> int:
        if v < 2 or v % 2:
            raise ValueError(f"--max-n must be an even integer >= 2, got {v}")
        return v

    @field_validator("rho", mode="before")
    @classmethod
    def parse_rho(cls, v):
        if isinstance(v, str):
            return parse_rational(v)
        return v

    @field_validator("rho")
    @classmethod
    def validate_rho(cls, v: Fraction) -> Fraction:
        if v < -1:
            raise ValueError(f"--rho must satisfy rho >= -1, got {format_rational(v)}")
        return v


class RationalArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that treats negative rationals such as -1/2 as values."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+/\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = RationalArgumentParser(
        prog="berger-eta",
        description="Exact Dirac eta invariants on Berger spheres"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_table_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--max-n", type=int, default=None, help="highest n (even)")
        sub.add_argument("--rho", default="1/1", help="squashing parameter p/q, rho >= -1")
        sub.add_argument(
            "--format",
            choices=[f.value for f in OutputFormat],
            default=OutputFormat.MARKDOWN.value,
            help="output format"
        )
        sub.add_argument("--include-odd", action="store_true", help="list odd n as well")

    add_table_options(subparsers.add_parser("table", help="c_n, eta_n and zeta(0) per sphere"))
    add_table_options(subparsers.add_parser("anomaly", help="zeta(0) on round even spheres"))
    add_table_options(subparsers.add_parser("verify", help="run the verification suite"))

    series = subparsers.add_parser("series", help="generating function coefficients")
    series.add_argument("order", type=int, help="highest power of z, >= 2")
    series.add_argument("--rho", default="1/1", help="squashing parameter p/q")

    bernoulli = subparsers.add_parser("bernoulli", help="generalized Bernoulli value B^(n)_nu(x)")
    bernoulli.add_argument("n", type=int, help="order n >= 1")
    bernoulli.add_argument("nu", type=int, help="index nu >= 0")
    bernoulli.add_argument("x", help="evaluation point p/q")

    return parser


def configure_logging(settings: Settings) -> None:
    """Send loguru output to stderr so stdout carries only results."""
    logger.remove()
    logger.add(sys.stderr, level=settings.log_level)


def _config_from_args(args: argparse.Namespace, settings: Settings) -> CliConfig:
    return CliConfig(
        max_n=args.max_n if args.max_n is not None else settings.max_n,
        format=args.format,
        rho=args.rho,
        include_odd=args.include_odd,
    )


# ============================================================================
# Commands
# ============================================================================

def cmd_table(config: CliConfig, deps: EngineDependencies) -> int:
    report = verify_all(
        config.max_n,
        [config.rho],
        tables=deps.tables,
        workers=deps.workers,
        series_margin=deps.series_margin,
    )
    rows = render.table_rows(report, include_odd=config.include_odd)

    if config.format is OutputFormat.JSON:
        output = render.render_json(render.build_payload(report, config.rho, rows))
    elif config.format is OutputFormat.CSV:
        output = render.render_csv(rows, render.TABLE_COLUMNS)
    else:
        output = render.render_markdown(rows, render.TABLE_COLUMNS, render.TABLE_HEADERS)
    sys.stdout.write(output)
    return EXIT_OK


def cmd_anomaly(config: CliConfig, deps: EngineDependencies) -> int:
    report = verify_all(
        config.max_n,
        [config.rho],
        tables=deps.tables,
        workers=deps.workers,
        series_margin=deps.series_margin,
    )
    rows = render.anomaly_rows(report)

    if config.format is OutputFormat.JSON:
        output = render.render_json(render.build_payload(report, config.rho, rows))
    elif config.format is OutputFormat.CSV:
        output = render.render_csv(rows, render.ANOMALY_COLUMNS)
    else:
        output = render.render_markdown(rows, render.ANOMALY_COLUMNS, render.ANOMALY_HEADERS)
    sys.stdout.write(output)
    return EXIT_OK


def cmd_verify(config: CliConfig, deps: EngineDependencies) -> int:
    report = verify_all(
        config.max_n,
        deps.rho_samples(config.rho),
        tables=deps.tables,
        workers=deps.workers,
        series_margin=deps.series_margin,
    )

    if config.format is OutputFormat.JSON:
        rows = render.table_rows(report, include_odd=config.include_odd)
        output = render.render_json(render.build_payload(report, config.rho, rows))
    elif config.format is OutputFormat.CSV:
        rows = render.table_rows(report, include_odd=config.include_odd)
        output = render.render_csv(rows, render.TABLE_COLUMNS)
    else:
        output = render.render_verification_text(report)
    sys.stdout.write(output)

    if not report.ok:
        sys.stderr.write(f"verification failed: {report.first_failure}\n")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_series(order: int, rho_text: str) -> int:
    if order < 2:
        raise InvalidInputError(f"series order must be >= 2, got {order}")
    series = weingart_series(order, parse_rational(rho_text))
    sys.stdout.write(f"{series}\n")
    return EXIT_OK


def cmd_bernoulli(n: int, nu: int, x_text: str) -> int:
    value = norlund_bernoulli(n, nu, parse_rational(x_text))
    sys.stdout.write(f"{format_rational(value)}\n")
    return EXIT_OK


# ============================================================================
# Entry point
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and return its exit code.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None

    Returns:
        0 on success, 1 on verification failure, 2 on usage or input errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = load_settings()
    except ValueError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    configure_logging(settings)

    try:
        deps = EngineDependencies.from_settings(settings)
        if args.command == "series":
            return cmd_series(args.order, args.rho)
        if args.command == "bernoulli":
            return cmd_bernoulli(args.n, args.nu, args.x)

        config = _config_from_args(args, settings)
        handlers = {"table": cmd_table, "anomaly": cmd_anomaly, "verify": cmd_verify}
        return handlers[args.command](config, deps)

    except ValidationError as e:
        for error in e.errors():
            sys.stderr.write(f"error: {error['msg']}\n")
        return EXIT_USAGE
    except InvalidInputError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
