"""
Tests for settings module - environment configuration and validation.

Tests cover:
- Default values
- BERGER_ETA_ environment overrides
- max_n, log_level and homogeneity_rhos validation
- load_settings error wrapping
"""

import pytest
from pydantic import ValidationError

from berger_eta.core.settings import Settings, load_settings


class TestSettings:
    """Test Settings class and configuration loading."""

    def test_default_values(self):
        """Defaults apply with an empty environment."""
        settings = Settings(_env_file=None)
        assert settings.log_level == "INFO"
        assert settings.max_n == 40
        assert settings.series_margin == 2
        assert settings.workers == 1
        assert settings.homogeneity_rhos == ["-1/1", "1/2", "2/1", "-3/7"]
        assert settings.reference_tables_path is None

    def test_fixture_values(self, test_settings):
        assert test_settings.max_n == 10
        assert test_settings.log_level == "DEBUG"

    def test_environment_override(self, monkeypatch, tmp_path):
        """BERGER_ETA_* variables override defaults."""
        monkeypatch.setenv("BERGER_ETA_MAX_N", "14")
        monkeypatch.setenv("BERGER_ETA_WORKERS", "4")
        monkeypatch.setenv("BERGER_ETA_REFERENCE_TABLES_PATH", str(tmp_path / "t.yaml"))
        settings = Settings(_env_file=None)
        assert settings.max_n == 14
        assert settings.workers == 4
        assert settings.reference_tables_path == tmp_path / "t.yaml"

    def test_list_from_json_environment(self, monkeypatch):
        monkeypatch.setenv("BERGER_ETA_HOMOGENEITY_RHOS", '["1/3"]')
        assert Settings(_env_file=None).homogeneity_rhos == ["1/3"]

    def test_log_level_normalized(self):
        assert Settings(_env_file=None, log_level="debug").log_level == "DEBUG"

    @pytest.mark.parametrize("value", [0, 3, -2])
    def test_max_n_must_be_even(self, value):
        with pytest.raises(ValidationError) as exc_info:
            Settings(_env_file=None, max_n=value)
        assert "max_n" in str(exc_info.value)

    def test_workers_positive(self):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, workers=0)

    def test_unknown_log_level_rejected(self):
        with pytest.raises(ValidationError) as exc_info:
            Settings(_env_file=None, log_level="loud")
        assert "log_level" in str(exc_info.value)

    @pytest.mark.parametrize("rhos", [["-2/1"], ["1/2", "-9/7"], ["abc"], ["1/0"]])
    def test_homogeneity_rhos_rejected(self, rhos):
        with pytest.raises(ValidationError) as exc_info:
            Settings(_env_file=None, homogeneity_rhos=rhos)
        assert "homogeneity_rhos" in str(exc_info.value)

    def test_homogeneity_rhos_boundary(self):
        assert Settings(_env_file=None, homogeneity_rhos=["-1/1", "0"]).homogeneity_rhos == ["-1/1", "0"]


class TestLoadSettings:
    """load_settings wraps validation errors."""

    def test_load_settings_success(self):
        assert isinstance(load_settings(), Settings)

    def test_load_settings_hint(self, monkeypatch):
        monkeypatch.setenv("BERGER_ETA_MAX_N", "7")
        with pytest.raises(ValueError) as exc_info:
            load_settings()
        assert "BERGER_ETA_MAX_N must be an even integer" in str(exc_info.value)

    def test_homogeneity_hint(self, monkeypatch):
        monkeypatch.setenv("BERGER_ETA_HOMOGENEITY_RHOS", '["-2/1"]')
        with pytest.raises(ValueError) as exc_info:
            load_settings()
        assert "BERGER_ETA_HOMOGENEITY_RHOS must be a JSON list" in str(exc_info.value)

