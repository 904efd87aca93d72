"""
Exact integer and rational arithmetic.

Rationals are fractions.Fraction, which is canonical at construction:
denominator > 0, gcd(|p|, q) = 1, and zero stored as 0/1. Every equality
check downstream is therefore plain structural equality.
"""

import math
import re
from fractions import Fraction
from typing import Union

from berger_eta.core.exceptions import InvalidInputError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int or Fraction to a canonical Fraction.

    Floats are refused: they would smuggle rounding into exact results.
    """
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise InvalidInputError(f"Expected int or Fraction, got {type(value).__name__}")
    return Fraction(value)


def rat(p: int, q: int = 1) -> Fraction:
    """
    Build the canonical rational p/q.

    Args:
        p: Numerator
        q: Denominator, nonzero

    Returns:
        Reduced fraction with the sign carried by the numerator

    Raises:
        InvalidInputError: If q is zero
    """
    if q == 0:
        raise InvalidInputError(f"Zero denominator in rat({p}, {q})")
    return Fraction(p, q)


def add(a: RationalLike, b: RationalLike) -> Fraction:
    return as_rational(a) + as_rational(b)


def sub(a: RationalLike, b: RationalLike) -> Fraction:
    return as_rational(a) - as_rational(b)


def mul(a: RationalLike, b: RationalLike) -> Fraction:
    return as_rational(a) * as_rational(b)


def div(a: RationalLike, b: RationalLike) -> Fraction:
    """Exact quotient; b == 0 raises ZeroDivisionError."""
    return as_rational(a) / as_rational(b)


def factorial(m: int) -> int:
    """Exact m! for m >= 0."""
    if m < 0:
        raise InvalidInputError(f"factorial needs m >= 0, got {m}")
    return math.factorial(m)


def binomial(m: int, k: int) -> int:
    """C(m, k), zero when k lies outside 0..m."""
    if m < 0:
        raise InvalidInputError(f"binomial needs m >= 0, got {m}")
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


def pow_int(a: RationalLike, k: int) -> Fraction:
    """
    Exact a**k for any signed integer k.

    Raises:
        ZeroDivisionError: For 0 raised to a negative power
    """
    return as_rational(a) ** k


def format_rational(a: RationalLike) -> str:
    """Canonical "p/q" text; the denominator is always printed."""
    value = as_rational(a)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or "p" into a canonical Fraction.

    Args:
        text: Rational literal, optional sign, surrounding whitespace allowed

    Returns:
        Canonical Fraction

    Raises:
        InvalidInputError: If the text is not a rational literal or q is zero
    """
    match = _RATIONAL_PATTERN.match(text or "")
    if not match:
        raise InvalidInputError(f"Not a rational literal: {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    return rat(numerator, denominator)
