"""
Core Infrastructure Module

Contains settings, exceptions and the per-run dependency object. Settings
and dependencies are imported from their own modules; the algebra layer
imports the exceptions through this package, which must stay import-light.
"""

from .exceptions import (
    EtaError,
    IntegrityError,
    InvalidInputError,
    SeriesError,
    SeriesIndexError,
)

__all__ = [
    "EtaError",
    "IntegrityError",
    "InvalidInputError",
    "SeriesError",
    "SeriesIndexError",
]
