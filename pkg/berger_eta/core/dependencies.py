"""
Run context for the eta engine, built from settings.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from berger_eta.algebra.exact_arith import RationalLike, as_rational, parse_rational
from berger_eta.core.settings import Settings
from berger_eta.services.reference_tables import ReferenceTables, load_reference_tables


@dataclass
class EngineDependencies:
    """
    Knobs and lazily loaded data shared by one CLI invocation.
    """

    # Configuration
    series_margin: int = 2
    workers: int = 1
    homogeneity_rhos: List[Fraction] = field(default_factory=list)
    reference_tables_path: Optional[Path] = None

    # Golden tables (lazy init)
    _tables: Optional[ReferenceTables] = field(
        default=None,
        init=False,
        repr=False
    )

    @property
    def tables(self) -> ReferenceTables:
        """Lazy loading of the golden tables."""
        if self._tables is None:
            self._tables = load_reference_tables(self.reference_tables_path)
        return self._tables

    def rho_samples(self, primary: RationalLike) -> List[Fraction]:
        """
        Primary rho first, then the configured samples without repeats.

        Args:
            primary: The rho requested on the command line

        Returns:
            Ordered, de-duplicated list of squashing values
        """
        samples: List[Fraction] = []
        for rho in [as_rational(primary), *self.homogeneity_rhos]:
            if rho not in samples:
                samples.append(rho)
        return samples

    @classmethod
    def from_settings(cls, settings: Settings, **overrides):
        """
        Create from settings with optional overrides.

        Args:
            settings: Application settings
            **overrides: Override specific fields

        Returns:
            EngineDependencies: Configured dependencies
        """
        values = dict(
            series_margin=settings.series_margin,
            workers=settings.workers,
            homogeneity_rhos=[parse_rational(text) for text in settings.homogeneity_rhos],
            reference_tables_path=settings.reference_tables_path,
        )
        values.update(overrides)
        return cls(**values)
