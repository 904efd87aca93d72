"""
Integration tests for the command line interface.

Tests cover:
- verify summary and exit codes
- Golden-table override through BERGER_ETA_REFERENCE_TABLES_PATH
- Markdown, CSV and JSON table output
- series and bernoulli subcommands
- Usage errors, in process and through python -m berger_eta
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from berger_eta.cli.render import render_json

REPO_ROOT = Path(__file__).resolve().parents[2]


# ============================================================================
# verify
# ============================================================================

@pytest.mark.integration
class TestVerifyCommand:
    """verify subcommand."""

    def test_clean_run(self, cli_runner):
        code, out, _ = cli_runner("verify", "--max-n", "14")
        assert code == 0
        assert "routes agree for all n ≤ 14" in out
        assert "7/7 golden c-values match, 6/6 zeta values match" in out
        assert "FAILED" not in out

    def test_corrupted_table_exits_one(self, cli_runner, monkeypatch, corrupted_tables_file):
        monkeypatch.setenv("BERGER_ETA_REFERENCE_TABLES_PATH", str(corrupted_tables_file))
        code, out, err = cli_runner("verify", "--max-n", "14")
        assert code == 1
        assert "6/7 golden c-values match" in out
        assert "FAILED: c_8" in out
        assert "verification failed" in err

    def test_missing_table_file_is_usage_error(self, cli_runner, monkeypatch, tmp_path):
        monkeypatch.setenv("BERGER_ETA_REFERENCE_TABLES_PATH", str(tmp_path / "absent.yaml"))
        code, _, err = cli_runner("verify", "--max-n", "4")
        assert code == 2
        assert "absent.yaml" in err

    def test_negative_rho_accepted(self, cli_runner):
        code, out, _ = cli_runner("verify", "--max-n", "6", "--rho", "-3/7")
        assert code == 0
        assert "-3/7" in out

    def test_json_summary(self, cli_runner):
        code, out, _ = cli_runner("verify", "--max-n", "8", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["verification"]["golden_c_matched"] == 4
        assert payload["verification"]["first_failure"] is None


# ============================================================================
# table and anomaly
# ============================================================================

@pytest.mark.integration
class TestTableCommand:
    """table and anomaly output formats."""

    def test_markdown(self, cli_runner):
        code, out, _ = cli_runner("table", "--max-n", "4")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "| dim | n | c_n | eta_n | zeta(0) |"
        assert lines[1] == "|---:|---:|---:|---:|---:|"
        assert lines[2] == "| 3 | 2 | -1/6 | -1/6 |  |"
        assert lines[3] == "| 7 | 4 | 11/360 | 11/360 | 11/90 |"

    def test_csv(self, cli_runner):
        code, out, _ = cli_runner("table", "--max-n", "4", "--format", "csv")
        assert code == 0
        assert out == "dim,n,c,eta,zeta\n3,2,-1/6,-1/6,\n7,4,11/360,11/360,11/90\n"

    def test_include_odd(self, cli_runner):
        _, out, _ = cli_runner("table", "--max-n", "4", "--format", "csv", "--include-odd")
        assert "5,3,0/1,0/1,\n" in out

    def test_json_is_byte_stable(self, cli_runner):
        _, first, _ = cli_runner("table", "--max-n", "8", "--format", "json")
        _, second, _ = cli_runner("table", "--max-n", "8", "--format", "json")
        assert first == second
        payload = json.loads(first)
        assert payload["rho"] == "1/1"
        assert payload["rows"][0] == {"dim": 3, "n": 2, "c": "-1/6", "eta": "-1/6", "zeta": None}

    @pytest.mark.parametrize("command", ["table", "verify"])
    def test_json_reparses_to_same_bytes(self, cli_runner, command):
        _, out, _ = cli_runner(command, "--max-n", "10", "--rho", "-3/7", "--format", "json")
        assert render_json(json.loads(out)) == out

    def test_csv_and_json_agree(self, cli_runner):
        _, csv_out, _ = cli_runner("table", "--max-n", "10", "--format", "csv")
        _, json_out, _ = cli_runner("table", "--max-n", "10", "--format", "json")
        csv_c = [line.split(",")[2] for line in csv_out.splitlines()[1:]]
        json_c = [row["c"] for row in json.loads(json_out)["rows"]]
        assert csv_c == json_c

    def test_oblate_limit(self, cli_runner):
        code, out, _ = cli_runner("table", "--max-n", "4", "--rho", "-1/1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["rho"] == "-1/1"
        assert payload["rows"][1]["eta"] == "11/360"

    def test_squashed_eta(self, cli_runner):
        _, out, _ = cli_runner("table", "--max-n", "2", "--rho", "1/2", "--format", "csv")
        assert out.splitlines()[1] == "3,2,-1/6,-1/24,"

    def test_max_n_from_environment(self, cli_runner, monkeypatch):
        monkeypatch.setenv("BERGER_ETA_MAX_N", "6")
        _, out, _ = cli_runner("table", "--format", "csv")
        assert out.splitlines()[-1].startswith("11,6,")

    def test_anomaly(self, cli_runner):
        code, out, _ = cli_runner("anomaly", "--max-n", "8")
        assert code == 0
        assert out.splitlines() == [
            "| n | zeta(0) |",
            "|---:|---:|",
            "| 4 | 11/90 |",
            "| 6 | -191/3780 |",
            "| 8 | 2497/113400 |",
        ]


# ============================================================================
# series and bernoulli
# ============================================================================

@pytest.mark.integration
class TestAlgebraCommands:
    """series and bernoulli subcommands."""

    def test_series(self, cli_runner):
        code, out, _ = cli_runner("series", "4")
        assert code == 0
        assert out == "1/1, 0/1, -1/12, 0/1, 11/720\n"

    def test_series_with_rho(self, cli_runner):
        _, out, _ = cli_runner("series", "2", "--rho", "2/1")
        assert out == "1/1, 0/1, -1/3\n"

    def test_series_order_too_small(self, cli_runner):
        code, _, err = cli_runner("series", "1")
        assert code == 2
        assert "order" in err

    def test_bernoulli(self, cli_runner):
        _, out, _ = cli_runner("bernoulli", "2", "2", "1/1")
        assert out == "-1/6\n"
        _, out, _ = cli_runner("bernoulli", "1", "1", "0")
        assert out == "-1/2\n"

    def test_bernoulli_invalid_order(self, cli_runner):
        code, _, _ = cli_runner("bernoulli", "0", "2", "0")
        assert code == 2


# ============================================================================
# Usage errors
# ============================================================================

@pytest.mark.integration
class TestUsageErrors:
    """Exit code 2 with a message on stderr."""

    @pytest.mark.parametrize("max_n", ["3", "0", "-2"])
    def test_bad_max_n(self, cli_runner, max_n):
        code, out, err = cli_runner("verify", "--max-n", max_n)
        assert code == 2
        assert out == ""
        assert "--max-n" in err

    @pytest.mark.parametrize("rho", ["-2/1", "abc", "1/0"])
    def test_bad_rho(self, cli_runner, rho):
        code, _, err = cli_runner("table", "--max-n", "4", "--rho", rho)
        assert code == 2
        assert err

    def test_unknown_subcommand(self, cli_runner):
        code, _, _ = cli_runner("frobnicate")
        assert code == 2

    def test_bad_format(self, cli_runner):
        code, _, _ = cli_runner("table", "--format", "xml")
        assert code == 2

    def test_bad_environment(self, cli_runner, monkeypatch):
        monkeypatch.setenv("BERGER_ETA_MAX_N", "5")
        code, _, err = cli_runner("table")
        assert code == 2
        assert "BERGER_ETA_MAX_N" in err

    def test_negative_homogeneity_sample_in_environment(self, cli_runner, monkeypatch):
        monkeypatch.setenv("BERGER_ETA_HOMOGENEITY_RHOS", '["-2/1"]')
        code, out, err = cli_runner("verify", "--max-n", "4")
        assert code == 2
        assert out == ""
        assert "BERGER_ETA_HOMOGENEITY_RHOS" in err


# ============================================================================
# python -m berger_eta
# ============================================================================

def _run_module(tmp_path, *argv, **env):
    # cwd is a scratch directory so no .env file is picked up
    environ = {key: value for key, value in os.environ.items() if not key.startswith("BERGER_ETA_")}
    environ["PYTHONPATH"] = os.pathsep.join(filter(None, [str(REPO_ROOT), environ.get("PYTHONPATH")]))
    environ.update(env)
    return subprocess.run(
        [sys.executable, "-m", "berger_eta", *argv],
        cwd=tmp_path,
        env=environ,
        capture_output=True,
        text=True,
        timeout=120,
    )


@pytest.mark.integration
class TestModuleEntryPoint:
    """python -m berger_eta in a fresh interpreter."""

    def test_series(self, tmp_path):
        result = _run_module(tmp_path, "series", "4")
        assert result.returncode == 0
        assert result.stdout == "1/1, 0/1, -1/12, 0/1, 11/720\n"

    def test_bad_environment_is_usage_error(self, tmp_path):
        result = _run_module(tmp_path, "table", "--max-n", "4", BERGER_ETA_MAX_N="5")
        assert result.returncode == 2
        assert result.stdout == ""
        assert "BERGER_ETA_MAX_N" in result.stderr
        assert "Traceback" not in result.stderr

    def test_bad_log_level_is_usage_error(self, tmp_path):
        result = _run_module(tmp_path, "series", "4", BERGER_ETA_LOG_LEVEL="LOUD")
        assert result.returncode == 2
        assert "BERGER_ETA_LOG_LEVEL" in result.stderr
