"""Error types raised by the eta engine."""


class EtaError(Exception):
    """Base class for all engine errors."""


class InvalidInputError(EtaError, ValueError):
    """An argument is outside the domain of the operation."""


class SeriesError(EtaError, ArithmeticError):
    """Division, valuation or composition is undefined for the given series."""


class SeriesIndexError(EtaError, IndexError):
    """Coefficient requested beyond the retained order."""


class IntegrityError(EtaError):
    """The independent routes for c_n disagree."""
