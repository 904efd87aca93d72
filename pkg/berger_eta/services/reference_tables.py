"""
Published reference values for the golden comparisons.

c_n for the Berger spheres S^3, S^7, ..., S^27 (n = 2, 4, ..., 14) and the
Dirac conformal anomaly zeta(0) on the round spheres S^4, ..., S^14, spin
factors included.

The embedded tables can be replaced by a YAML file of the form

    c_values:
      2: "-1/6"
      ...
    zeta_values:
      4: "11/90"
      ...

which is how the corrupted-entry fixtures are supplied.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import yaml
from loguru import logger

from berger_eta.algebra.exact_arith import parse_rational
from berger_eta.core.exceptions import InvalidInputError


C_VALUES: Dict[int, Fraction] = {
    2: Fraction(-1, 6),
    4: Fraction(11, 360),
    6: Fraction(-191, 30240),
    8: Fraction(2497, 1814400),
    10: Fraction(-14797, 47900160),
    12: Fraction(92427157, 1307674368000),
    14: Fraction(-36740617, 2241727488000),
}

ZETA_VALUES: Dict[int, Fraction] = {
    4: Fraction(11, 90),
    6: Fraction(-191, 3780),
    8: Fraction(2497, 113400),
    10: Fraction(-14797, 1496880),
    12: Fraction(92427157, 20432412000),
    14: Fraction(-36740617, 17513496000),
}


@dataclass(frozen=True)
class ReferenceTables:
    """Golden c_n and zeta(0) values keyed by n."""

    c_values: Dict[int, Fraction] = field(default_factory=lambda: dict(C_VALUES))
    zeta_values: Dict[int, Fraction] = field(default_factory=lambda: dict(ZETA_VALUES))


def reference_tables() -> Tuple[Dict[int, Fraction], Dict[int, Fraction]]:
    """The embedded (c-table, zeta-table) pair."""
    return dict(C_VALUES), dict(ZETA_VALUES)


def _parse_table(raw, name: str, source: Path) -> Dict[int, Fraction]:
    if not isinstance(raw, dict):
        raise InvalidInputError(f"{source}: '{name}' must be a mapping of n to 'p/q'")
    table = {}
    for key, value in raw.items():
        try:
            n = int(key)
        except (TypeError, ValueError):
            raise InvalidInputError(f"{source}: '{name}' key {key!r} is not an integer")
        table[n] = parse_rational(str(value))
    return table


def load_reference_tables(path: Optional[Union[str, Path]] = None) -> ReferenceTables:
    """
    Load the golden tables.

    Args:
        path: Optional YAML file; the embedded tables are used when None

    Returns:
        ReferenceTables

    Raises:
        InvalidInputError: If the file is missing or malformed
    """
    if path is None:
        return ReferenceTables()

    source = Path(path)
    logger.info(f"Loading reference tables from {source}")
    try:
        with source.open("r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except OSError as e:
        raise InvalidInputError(f"Cannot read reference tables {source}: {e}") from e
    except yaml.YAMLError as e:
        raise InvalidInputError(f"Invalid YAML in {source}: {e}") from e

    if not isinstance(data, dict):
        raise InvalidInputError(f"{source}: expected a mapping at top level")

    return ReferenceTables(
        c_values=_parse_table(data.get("c_values", {}), "c_values", source),
        zeta_values=_parse_table(data.get("zeta_values", {}), "zeta_values", source),
    )
