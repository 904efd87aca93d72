"""
Truncated formal power series over the rationals.

A TruncatedSeries stores the coefficients of z^0 .. z^order and nothing
beyond. Binary operations return the minimum of the operand orders, and
operations that lose precision (division by a series of positive valuation,
differentiation) lower the order instead of padding with zeros.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from berger_eta.algebra.exact_arith import RationalLike, as_rational, format_rational
from berger_eta.core.exceptions import InvalidInputError, SeriesError, SeriesIndexError


@dataclass(frozen=True)
class TruncatedSeries:
    """Dense coefficient tuple, index k holding the coefficient of z^k."""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise InvalidInputError("A truncated series needs at least the z^0 coefficient")
        object.__setattr__(
            self, "coefficients", tuple(as_rational(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        """Highest retained power of z."""
        return len(self.coefficients) - 1

    @classmethod
    def from_coefficients(
        cls,
        coefficients: Iterable[RationalLike],
        order: Optional[int] = None
    ) -> "TruncatedSeries":
        """
        Build a series from leading coefficients.

        Args:
            coefficients: Coefficients of z^0, z^1, ...
            order: Retained order; missing coefficients are exact zeros,
                extra ones are dropped

        Returns:
            TruncatedSeries of the requested order
        """
        values = [as_rational(c) for c in coefficients]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise InvalidInputError(f"Series order must be >= 0, got {order}")
        values = values[:order + 1]
        values.extend([Fraction(0)] * (order + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([1], order)

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([value], order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series z (zero when order is 0)."""
        return cls.from_coefficients([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return coefficient(self, k)

    def __add__(self, other):
        return series_add(self, _promote(other, self.order))

    def __radd__(self, other):
        return series_add(_promote(other, self.order), self)

    def __sub__(self, other):
        return series_sub(self, _promote(other, self.order))

    def __rsub__(self, other):
        return series_sub(_promote(other, self.order), self)

    def __neg__(self):
        return series_neg(self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    def __rmul__(self, other):
        return series_scale(self, other)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        return series_scale(self, Fraction(1) / as_rational(other))

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __str__(self) -> str:
        return ", ".join(format_rational(c) for c in self.coefficients)


def _promote(value, order: int) -> TruncatedSeries:
    if isinstance(value, TruncatedSeries):
        return value
    return TruncatedSeries.constant(value, order)


# ============================================================================
# Ring operations
# ============================================================================

def valuation(f: TruncatedSeries) -> Optional[int]:
    """Index of the first nonzero coefficient, None for the zero series."""
    for k, c in enumerate(f.coefficients):
        if c:
            return k
    return None


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    order = min(f.order, g.order)
    return TruncatedSeries(tuple(f.coefficients[k] + g.coefficients[k] for k in range(order + 1)))


def series_sub(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    order = min(f.order, g.order)
    return TruncatedSeries(tuple(f.coefficients[k] - g.coefficients[k] for k in range(order + 1)))


def series_neg(f: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(-c for c in f.coefficients))


def series_scale(f: TruncatedSeries, c: RationalLike) -> TruncatedSeries:
    factor = as_rational(c)
    return TruncatedSeries(tuple(factor * a for a in f.coefficients))


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order."""
    order = min(f.order, g.order)
    a = f.coefficients
    b = g.coefficients
    result = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        if not a[i]:
            continue
        for j in range(order + 1 - i):
            if b[j]:
                result[i + j] += a[i] * b[j]
    return TruncatedSeries(tuple(result))


def series_div(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    Exact quotient h with f = g*h to the retained order.

    A common factor z^v is cancelled when g has valuation v > 0; the quotient
    then retains v fewer coefficients.

    Raises:
        SeriesError: If g is zero, or f vanishes to lower order than g
    """
    vg = valuation(g)
    if vg is None:
        raise SeriesError("Division by the zero series")

    vf = valuation(f)
    if vf is not None and vf < vg:
        raise SeriesError(f"Quotient has a pole: valuation {vf} over valuation {vg}")

    order = min(f.order, g.order) - vg
    if order < 0:
        raise SeriesError("No coefficient survives the cancellation of the common factor")

    num = f.coefficients[vg:vg + order + 1]
    den = g.coefficients[vg:vg + order + 1]
    lead = den[0]

    quotient = []
    for k in range(order + 1):
        acc = num[k]
        for i in range(1, k + 1):
            if den[i]:
                acc -= den[i] * quotient[k - i]
        quotient.append(acc / lead)
    return TruncatedSeries(tuple(quotient))


def series_pow(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """f**k for k >= 0 by repeated squaring."""
    if k < 0:
        raise InvalidInputError(f"Series power needs k >= 0, got {k}")

    result = TruncatedSeries.one(f.order)
    base = f
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def truncate(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """Drop coefficients above order; raising the order is refused."""
    if order > f.order:
        raise SeriesError(f"Cannot extend a series of order {f.order} to order {order}")
    if order < 0:
        raise InvalidInputError(f"Series order must be >= 0, got {order}")
    return TruncatedSeries(f.coefficients[:order + 1])


def coefficient(f: TruncatedSeries, k: int) -> Fraction:
    """Exact coefficient of z^k."""
    if k < 0 or k > f.order:
        raise SeriesIndexError(f"Coefficient {k} outside retained range 0..{f.order}")
    return f.coefficients[k]


# ============================================================================
# Calculus
# ============================================================================

def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """d/dz; the order drops by one."""
    if f.order == 0:
        raise SeriesError("Differentiating an order-0 series leaves no known coefficient")
    return TruncatedSeries(tuple((k + 1) * f.coefficients[k + 1] for k in range(f.order)))


def log_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """
    z*f'(z)/f(z), computed as v + z*u'/u where f = z^v * u.

    The logarithm of a series with positive valuation has no power series,
    but its z-scaled derivative does. The result keeps order(f) - v
    coefficients and its constant term is exactly v.

    Raises:
        SeriesError: If f vanishes to the retained order
    """
    v = valuation(f)
    if v is None:
        raise SeriesError("Logarithmic derivative of the zero series is undefined")

    unit = TruncatedSeries(f.coefficients[v:])
    z_unit_prime = TruncatedSeries(tuple(k * c for k, c in enumerate(unit.coefficients)))
    return series_add(series_div(z_unit_prime, unit), TruncatedSeries.constant(v, unit.order))


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    f(g(z)) by Horner accumulation.

    Raises:
        SeriesError: If g has a nonzero constant term
    """
    if g.coefficients[0]:
        raise SeriesError("Composition needs an inner series with zero constant term")

    order = min(f.order, g.order)
    inner = truncate(g, order)
    result = TruncatedSeries.constant(f.coefficients[order], order)
    for k in range(order - 1, -1, -1):
        result = series_mul(result, inner)
        result = series_add(result, TruncatedSeries.constant(f.coefficients[k], order))
    return result


def substitute_scaled(f: TruncatedSeries, c: RationalLike) -> TruncatedSeries:
    """f(c*z): coefficient k is multiplied by c**k."""
    factor = as_rational(c)
    scaled = []
    power = Fraction(1)
    for a in f.coefficients:
        scaled.append(a * power)
        power *= factor
    return TruncatedSeries(tuple(scaled))


# ============================================================================
# Elementary series
# ============================================================================

def exp_series(order: int) -> TruncatedSeries:
    """Sum of t^k/k!."""
    if order < 0:
        raise InvalidInputError(f"Series order must be >= 0, got {order}")
    coeffs = []
    term = Fraction(1)
    for k in range(order + 1):
        if k:
            term /= k
        coeffs.append(term)
    return TruncatedSeries(tuple(coeffs))


def sinh_series(order: int) -> TruncatedSeries:
    """Sum of t^(2k+1)/(2k+1)!."""
    exp = exp_series(order)
    return TruncatedSeries(tuple(c if k % 2 else Fraction(0) for k, c in enumerate(exp.coefficients)))


def arcsinh_series(order: int) -> TruncatedSeries:
    """
    Inverse hyperbolic sine, sum of (-1)^k (2k)! / (4^k (k!)^2 (2k+1)) u^(2k+1).

    Coefficients follow from the ratio of consecutive terms, so no factorial
    is formed explicitly.
    """
    if order < 1:
        raise InvalidInputError(f"arcsinh series needs order >= 1, got {order}")

    coeffs = [Fraction(0)] * (order + 1)
    # central = (-1)^k (2k)! / (4^k (k!)^2)
    central = Fraction(1)
    k = 0
    while 2 * k + 1 <= order:
        coeffs[2 * k + 1] = central / (2 * k + 1)
        central *= Fraction(-(2 * k + 1), 2 * (k + 1))
        k += 1
    return TruncatedSeries(tuple(coeffs))


def log1p_series(order: int) -> TruncatedSeries:
    """log(1+u) = sum of (-1)^(k+1) u^k / k."""
    if order < 1:
        raise InvalidInputError(f"log(1+u) series needs order >= 1, got {order}")
    coeffs = [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)]
    return TruncatedSeries(tuple(coeffs))


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """
    log f for a series with f(0) = 1.

    Raises:
        SeriesError: If the constant term is not 1
    """
    if f.coefficients[0] != 1:
        raise SeriesError("series_log needs constant term 1; use log_derivative otherwise")
    if f.order == 0:
        return TruncatedSeries.zero(0)
    return compose(log1p_series(f.order), series_sub(f, TruncatedSeries.one(f.order)))
