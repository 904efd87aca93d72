"""
Pytest configuration and shared fixtures for the Berger sphere eta tests.
"""

import os
import sys
from fractions import Fraction

import pytest
from hypothesis import settings as hypothesis_settings
from loguru import logger

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from berger_eta.algebra.power_series import TruncatedSeries
from berger_eta.cli.app import main
from berger_eta.core.dependencies import EngineDependencies
from berger_eta.core.settings import Settings
from berger_eta.services import eta_engine
from berger_eta.services.reference_tables import C_VALUES, ZETA_VALUES

hypothesis_settings.register_profile("default", max_examples=50, deadline=None)
hypothesis_settings.load_profile("default")


# ============================================================================
# Settings Fixtures
# ============================================================================

@pytest.fixture
def test_settings():
    """Settings with small, fast values."""
    return Settings(
        log_level="DEBUG",
        max_n=10,
        series_margin=2,
        workers=1,
        homogeneity_rhos=["-1/1", "1/2", "2/1", "-3/7"],
        reference_tables_path=None,
    )


@pytest.fixture
def test_deps(test_settings):
    """Engine dependencies built from test settings."""
    return EngineDependencies.from_settings(test_settings)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep BERGER_ETA_* variables from the developer shell out of tests."""
    for key in list(os.environ):
        if key.startswith("BERGER_ETA_"):
            monkeypatch.delenv(key, raising=False)


# ============================================================================
# Series Fixtures
# ============================================================================

@pytest.fixture
def geometric_series():
    """1/(1 - z) to order 6."""
    return TruncatedSeries.from_coefficients([1] * 7)


@pytest.fixture
def one_plus_z():
    """1 + z to order 6."""
    return TruncatedSeries.from_coefficients([1, 1], order=6)


# ============================================================================
# CLI Fixtures
# ============================================================================

@pytest.fixture
def cli_runner(capsys):
    """Run the CLI in process; returns (exit code, stdout, stderr)."""
    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    yield run
    # main() binds its sink to the captured stderr
    logger.remove()


# ============================================================================
# Reference Table Fixtures
# ============================================================================

def _write_tables(path, c_values, zeta_values):
    lines = ["c_values:"]
    lines += [f'  {n}: "{v.numerator}/{v.denominator}"' for n, v in sorted(c_values.items())]
    lines.append("zeta_values:")
    lines += [f'  {n}: "{v.numerator}/{v.denominator}"' for n, v in sorted(zeta_values.items())]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def reference_tables_file(tmp_path):
    """YAML copy of the embedded golden tables."""
    return _write_tables(tmp_path / "tables.yaml", C_VALUES, ZETA_VALUES)


@pytest.fixture
def corrupted_tables_file(tmp_path):
    """Golden tables with c_8 altered, as a published misprint would be."""
    c_values = dict(C_VALUES)
    c_values[8] = c_values[8] + Fraction(1, 1814400)
    return _write_tables(tmp_path / "corrupted.yaml", c_values, ZETA_VALUES)


@pytest.fixture
def corrupted_zeta_file(tmp_path):
    """Golden tables with the S^6 anomaly sign flipped."""
    zeta_values = dict(ZETA_VALUES)
    zeta_values[6] = -zeta_values[6]
    return _write_tables(tmp_path / "corrupted_zeta.yaml", C_VALUES, zeta_values)


# ============================================================================
# Route Fixtures
# ============================================================================

@pytest.fixture
def skewed_habel(monkeypatch):
    """The closed-sum route returns c_4 + 1/7 at n = 4 and the true value elsewhere."""
    real = eta_engine.c_habel

    def skewed(n):
        return real(n) + (Fraction(1, 7) if n == 4 else 0)

    monkeypatch.setattr(eta_engine, "c_habel", skewed)
    return skewed


@pytest.fixture
def odd_routes_nonzero(monkeypatch):
    """All four routes agree on 1/5 at n = 3 instead of vanishing."""
    for name in ("c_weingart", "c_habel", "c_bernoulli", "c_dnumber"):
        real = getattr(eta_engine, name)

        def route(n, *args, _real=real):
            return Fraction(1, 5) if n == 3 else _real(n, *args)

        monkeypatch.setattr(eta_engine, name, route)
