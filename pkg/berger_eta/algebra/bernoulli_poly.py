"""
Bernoulli numbers, Bernoulli polynomials and their Nörlund generalizations.

Handles:
- Bernoulli numbers B_0..B_M by the binomial recurrence (B_1 = -1/2)
- Bernoulli polynomials B_m(x) and the Pochhammer product x(x+1)...(x+n-2)
- Generalized Bernoulli values B^(n)_nu(x) from the generating function
  (t/(e^t - 1))^n e^(xt)
- Nörlund D-numbers D^(n)_nu from (t/sinh t)^n
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from loguru import logger

from berger_eta.algebra.exact_arith import RationalLike, as_rational, binomial, factorial
from berger_eta.algebra.power_series import (
    TruncatedSeries,
    coefficient,
    exp_series,
    series_div,
    series_mul,
    series_pow,
    series_sub,
    sinh_series,
    substitute_scaled,
)
from berger_eta.core.exceptions import InvalidInputError


# ============================================================================
# Dense polynomials
# ============================================================================

@dataclass(frozen=True)
class RatPolynomial:
    """
    Rational polynomial, coefficients from degree 0 upward.

    Trailing zeros are stripped, so the zero polynomial is the empty tuple.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        values = [as_rational(c) for c in self.coefficients]
        while values and not values[-1]:
            values.pop()
        object.__setattr__(self, "coefficients", tuple(values))

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: RationalLike) -> Fraction:
        return eval_poly(self, x)

    def __mul__(self, other: "RatPolynomial") -> "RatPolynomial":
        if self.is_zero() or other.is_zero():
            return RatPolynomial()
        result = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                result[i + j] += a * b
        return RatPolynomial(tuple(result))


def eval_poly(poly: RatPolynomial, x: RationalLike) -> Fraction:
    """Horner evaluation at a rational point."""
    point = as_rational(x)
    value = Fraction(0)
    for c in reversed(poly.coefficients):
        value = value * point + c
    return value


def poly_derivative(poly: RatPolynomial, l: int = 1) -> RatPolynomial:
    """l-fold formal derivative."""
    if l < 0:
        raise InvalidInputError(f"Derivative order must be >= 0, got {l}")

    coeffs = list(poly.coefficients)
    for _ in range(l):
        if not coeffs:
            break
        coeffs = [k * coeffs[k] for k in range(1, len(coeffs))]
    return RatPolynomial(tuple(coeffs))


def pochhammer_poly(n: int) -> RatPolynomial:
    """
    Expanded rising product x(x+1)...(x+n-2), monic of degree n-1.

    Raises:
        InvalidInputError: If n < 2
    """
    if n < 2:
        raise InvalidInputError(f"Pochhammer product needs n >= 2, got {n}")

    product = RatPolynomial((Fraction(1),))
    for i in range(n - 1):
        product = product * RatPolynomial((Fraction(i), Fraction(1)))
    return product


# ============================================================================
# Bernoulli numbers and polynomials
# ============================================================================

@dataclass(frozen=True)
class BernoulliCache:
    """B_0..B_M under the B_1 = -1/2 convention."""

    numbers: Tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.numbers) - 1

    def __getitem__(self, m: int) -> Fraction:
        if m < 0 or m > self.max_index:
            raise IndexError(f"B_{m} not cached (cache holds B_0..B_{self.max_index})")
        return self.numbers[m]


_cache_lock = threading.Lock()
_cache = BernoulliCache((Fraction(1),))


def _extend(numbers: Tuple[Fraction, ...], max_m: int) -> Tuple[Fraction, ...]:
    values = list(numbers)
    for m in range(len(values), max_m + 1):
        # sum_{k=0}^{m} C(m+1, k) B_k = 0
        acc = sum(binomial(m + 1, k) * values[k] for k in range(m))
        values.append(-acc / (m + 1))
    return tuple(values)


def bernoulli_numbers(max_m: int) -> BernoulliCache:
    """
    Bernoulli numbers B_0..B_max_m.

    Computed once per process; later calls reuse and extend the shared list.

    Args:
        max_m: Highest index needed

    Returns:
        BernoulliCache holding exactly B_0..B_max_m
    """
    global _cache
    if max_m < 0:
        raise InvalidInputError(f"max_m must be >= 0, got {max_m}")

    with _cache_lock:
        if _cache.max_index < max_m:
            logger.debug(f"Extending Bernoulli cache from B_{_cache.max_index} to B_{max_m}")
            _cache = BernoulliCache(_extend(_cache.numbers, max_m))
        numbers = _cache.numbers

    return BernoulliCache(numbers[:max_m + 1])


def bernoulli_polynomial(m: int) -> RatPolynomial:
    """B_m(x) = sum_k C(m, k) B_k x^(m-k)."""
    if m < 0:
        raise InvalidInputError(f"Bernoulli polynomial index must be >= 0, got {m}")

    numbers = bernoulli_numbers(m)
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = binomial(m, k) * numbers[k]
    return RatPolynomial(tuple(coeffs))


# ============================================================================
# Generating functions
# ============================================================================

def bernoulli_egf(order: int) -> TruncatedSeries:
    """t/(e^t - 1) to the given order."""
    if order < 0:
        raise InvalidInputError(f"Series order must be >= 0, got {order}")
    # One extra input coefficient pays for cancelling the common factor t
    numerator = TruncatedSeries.variable(order + 1)
    denominator = series_sub(exp_series(order + 1), TruncatedSeries.one(order + 1))
    return series_div(numerator, denominator)


def sinhc_reciprocal(order: int) -> TruncatedSeries:
    """t/sinh t to the given order."""
    if order < 0:
        raise InvalidInputError(f"Series order must be >= 0, got {order}")
    return series_div(TruncatedSeries.variable(order + 1), sinh_series(order + 1))


@lru_cache(maxsize=256)
def _bernoulli_egf_power(n: int, order: int) -> TruncatedSeries:
    return series_pow(bernoulli_egf(order), n)


@lru_cache(maxsize=256)
def _sinhc_reciprocal_power(n: int, order: int) -> TruncatedSeries:
    return series_pow(sinhc_reciprocal(order), n)


def norlund_bernoulli(n: int, nu: int, x: RationalLike) -> Fraction:
    """
    Generalized Bernoulli value B^(n)_nu(x).

    Args:
        n: Order of the generalization, n >= 1
        nu: Index, nu >= 0
        x: Rational evaluation point

    Returns:
        nu! times the coefficient of t^nu in (t/(e^t - 1))^n e^(xt)
    """
    if n < 1:
        raise InvalidInputError(f"Nörlund order must be >= 1, got {n}")
    if nu < 0:
        raise InvalidInputError(f"Index nu must be >= 0, got {nu}")

    shift = substitute_scaled(exp_series(nu), as_rational(x))
    product = series_mul(_bernoulli_egf_power(n, nu), shift)
    return factorial(nu) * coefficient(product, nu)


def d_number(n: int, nu: int) -> Fraction:
    """Nörlund D-number: nu! times the coefficient of t^nu in (t/sinh t)^n."""
    if n < 1:
        raise InvalidInputError(f"D-number order must be >= 1, got {n}")
    if nu < 0:
        raise InvalidInputError(f"Index nu must be >= 0, got {nu}")

    return factorial(nu) * coefficient(_sinhc_reciprocal_power(n, nu), nu)
