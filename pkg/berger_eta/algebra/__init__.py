"""Exact rational, power series and Bernoulli machinery."""

from .exact_arith import format_rational, parse_rational, rat
from .power_series import TruncatedSeries
from .bernoulli_poly import RatPolynomial, BernoulliCache

__all__ = [
    "format_rational",
    "parse_rational",
    "rat",
    "TruncatedSeries",
    "RatPolynomial",
    "BernoulliCache",
]
