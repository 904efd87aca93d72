"""
Settings module for the Berger sphere eta engine.

Uses python-dotenv and pydantic-settings for environment variable management.
Only ambient knobs live here; the computational flags come from the command line.
"""

from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from berger_eta.algebra.exact_arith import parse_rational

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_prefix="BERGER_ETA_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Logging
    log_level: str = Field(default="INFO", description="Loguru level for the stderr sink")

    # Computation defaults
    max_n: int = Field(default=40, description="Default highest n for table and verify")
    series_margin: int = Field(default=2, ge=1, description="Extra series order kept beyond n")
    workers: int = Field(default=1, ge=1, description="Processes used for per-n fan-out")

    # Verification
    homogeneity_rhos: List[str] = Field(
        default_factory=lambda: ["-1/1", "1/2", "2/1", "-3/7"],
        description="Squashing samples checked against the rho-substituted generating function"
    )
    reference_tables_path: Optional[Path] = Field(
        default=None,
        description="YAML file overriding the embedded golden tables"
    )

    @field_validator("max_n")
    @classmethod
    def validate_max_n(cls, v: int) -> int:
        """max_n must be even and at least 2."""
        if v < 2 or v % 2:
            raise ValueError(f"max_n must be an even integer >= 2, got {v}")
        return v

    @field_validator("log_level")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}, got {v}")
        return level

    @field_validator("homogeneity_rhos")
    @classmethod
    def validate_homogeneity_rhos(cls, v: List[str]) -> List[str]:
        """Every sample must parse as p/q and satisfy rho >= -1."""
        for text in v:
            if parse_rational(text) < -1:
                raise ValueError(f"homogeneity_rhos entries must satisfy rho >= -1, got {text}")
        return v


def load_settings() -> Settings:
    """
    Load settings with proper error handling and environment loading.

    Returns:
        Settings: Loaded application settings

    Raises:
        ValueError: If settings are invalid
    """
    # Load environment variables from .env file
    load_dotenv()

    try:
        return Settings()
    except Exception as e:
        error_msg = f"Failed to load settings: {e}"
        if "max_n" in str(e).lower():
            error_msg += "\nBERGER_ETA_MAX_N must be an even integer >= 2"
        if "reference_tables_path" in str(e).lower():
            error_msg += "\nBERGER_ETA_REFERENCE_TABLES_PATH must point to a YAML file"
        if "log_level" in str(e).lower():
            error_msg += "\nBERGER_ETA_LOG_LEVEL must name a loguru level such as DEBUG or INFO"
        if "homogeneity_rhos" in str(e).lower():
            error_msg += "\nBERGER_ETA_HOMOGENEITY_RHOS must be a JSON list of p/q values >= -1"
        raise ValueError(error_msg) from e
