"""
Four independent routes to the Dirac eta coefficients c_n on Berger spheres.

- Weingart: z d/dz log 2 arcsinh(rho z / 2) = 1 + (1/2) sum eta_n z^n
- Habel: -2/(n-1)! sum_l B_(l+1)(n/2 - 1)/(l+1)! Phi^(l)(1 - n/2)
- Bernoulli: kappa/n! B^(n)_n(n/2) with kappa = 2
- D-number: D^(n)_n / (2^(n-1) n!)

eta on the (2n-1)-sphere is c_n rho^n, and 2^(n/2) c_n is the Dirac
conformal anomaly on the round n-sphere.
"""

from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from berger_eta.algebra.bernoulli_poly import (
    bernoulli_polynomial,
    d_number,
    eval_poly,
    norlund_bernoulli,
    pochhammer_poly,
    poly_derivative,
)
from berger_eta.algebra.exact_arith import (
    RationalLike,
    as_rational,
    factorial,
    format_rational,
    pow_int,
)
from berger_eta.algebra.power_series import (
    TruncatedSeries,
    arcsinh_series,
    coefficient,
    log_derivative,
    series_neg,
    series_scale,
    sinh_series,
    substitute_scaled,
)
from berger_eta.core.exceptions import IntegrityError, InvalidInputError
from berger_eta.services.models import EtaCoefficient

# Prefactor of the generalized Bernoulli route. A prefactor of 4 doubles every
# c_n against the golden table; 2 matches it.
BERNOULLI_PREFACTOR = 2

DEFAULT_SERIES_MARGIN = 2


@dataclass(frozen=True)
class SquashingParameter:
    """rho with l_3^2 = 1 + rho; rho = -1 is the extreme oblate limit."""

    rho: Fraction

    def __post_init__(self):
        value = as_rational(self.rho)
        if value < -1:
            raise InvalidInputError(f"Squashing parameter must satisfy rho >= -1, got {value}")
        object.__setattr__(self, "rho", value)


def _squashing(rho) -> SquashingParameter:
    if isinstance(rho, SquashingParameter):
        return rho
    return SquashingParameter(as_rational(rho))


# ============================================================================
# Route A: extrinsic generating function
# ============================================================================

def _generating_series(order: int, rho: Fraction, outer) -> TruncatedSeries:
    if rho == 0:
        raise InvalidInputError("The generating function degenerates at rho = 0")
    # One extra coefficient is consumed by the valuation of the argument
    argument = series_scale(substitute_scaled(outer(order + 1), rho / 2), 2)
    return log_derivative(argument)


def weingart_series(order: int, rho: RationalLike = 1) -> TruncatedSeries:
    """
    z d/dz log 2 arcsinh(rho z/2), retained to z^order.

    The constant term is 1 and the coefficient of z^n is eta_n / 2.
    """
    if order < 0:
        raise InvalidInputError(f"Series order must be >= 0, got {order}")
    return _generating_series(order, _squashing(rho).rho, arcsinh_series)


def reciprocal_reading_series(order: int, rho: RationalLike = 1) -> TruncatedSeries:
    """
    z d/dz log (2/sinh(rho z/2)): the notation read as a reciprocal.

    Its constant term is -1, so it cannot equal 1 + (1/2) sum eta_n z^n.
    """
    return series_neg(hyperbolic_sine_reading_series(order, rho))


def hyperbolic_sine_reading_series(order: int, rho: RationalLike = 1) -> TruncatedSeries:
    """z d/dz log 2 sinh(rho z/2): the inverse sign dropped; c_2 comes out +1/6."""
    if order < 0:
        raise InvalidInputError(f"Series order must be >= 0, got {order}")
    return _generating_series(order, _squashing(rho).rho, sinh_series)


def c_weingart(n: int, order_margin: int = DEFAULT_SERIES_MARGIN) -> Fraction:
    """
    c_n from the generating function at rho = 1.

    Args:
        n: Index, n >= 1
        order_margin: Extra coefficients carried beyond z^n

    Returns:
        Twice the coefficient of z^n
    """
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if order_margin < 0:
        raise InvalidInputError(f"order_margin must be >= 0, got {order_margin}")

    series = weingart_series(n + order_margin, 1)
    assert series.coefficients[0] == 1, "generating function must start at 1"
    return 2 * coefficient(series, n)


# ============================================================================
# Route B: Habel's sum
# ============================================================================

def c_habel(n: int) -> Fraction:
    """
    c_n from the conjectured closed sum over derivatives of the Pochhammer product.

    The Bernoulli argument n/2 - 1 is the negative of the product argument.
    """
    if n < 2:
        raise InvalidInputError(f"Habel's sum needs n >= 2, got {n}")

    phi = pochhammer_poly(n)
    bernoulli_point = Fraction(n, 2) - 1
    phi_point = 1 - Fraction(n, 2)

    total = Fraction(0)
    derived = phi
    for l in range(n):
        if l:
            derived = poly_derivative(derived)
        phi_value = eval_poly(derived, phi_point)
        if not phi_value:
            continue
        b_value = eval_poly(bernoulli_polynomial(l + 1), bernoulli_point)
        total += b_value / factorial(l + 1) * phi_value

    return Fraction(-2, factorial(n - 1)) * total


# ============================================================================
# Routes C and D: generalized Bernoulli values and D-numbers
# ============================================================================

def c_bernoulli(n: int, kappa: RationalLike = BERNOULLI_PREFACTOR) -> Fraction:
    """kappa/n! * B^(n)_n(n/2); vanishes for odd n by the reflection symmetry."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return as_rational(kappa) / factorial(n) * norlund_bernoulli(n, n, Fraction(n, 2))


def c_dnumber(n: int) -> Fraction:
    """D^(n)_n / (2^(n-1) n!)."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return d_number(n, n) / (2 ** (n - 1) * factorial(n))


# ============================================================================
# Assembled quantities
# ============================================================================

def compute_coefficient(
    n: int,
    rho: RationalLike = 1,
    series_margin: int = DEFAULT_SERIES_MARGIN
) -> EtaCoefficient:
    """
    Evaluate all four routes for one n.

    Args:
        n: Index, n >= 2
        rho: Squashing parameter for the derived eta value
        series_margin: Working-order margin for the generating-function route

    Returns:
        EtaCoefficient with agreement flag, eta and (for even n >= 4) anomaly
    """
    if n < 2:
        raise InvalidInputError(f"n must be >= 2, got {n}")
    squashing = _squashing(rho)

    values = (
        c_weingart(n, series_margin),
        c_habel(n),
        c_bernoulli(n),
        c_dnumber(n),
    )
    agreed = len(set(values)) == 1
    if agreed:
        logger.debug(f"n={n}: c_n = {format_rational(values[0])}, routes agree")
    else:
        logger.warning(f"n={n}: routes disagree: {[format_rational(v) for v in values]}")

    eta = values[0] * pow_int(squashing.rho, n) if agreed else None
    anomaly = None
    if agreed and n % 2 == 0 and n >= 4:
        anomaly = pow_int(2, n // 2) * values[0]

    return EtaCoefficient(
        n=n,
        dim=2 * n - 1,
        c_weingart=values[0],
        c_habel=values[1],
        c_bernoulli=values[2],
        c_dnumber=values[3],
        agreed=agreed,
        rho=squashing.rho,
        eta=eta,
        anomaly=anomaly,
    )


def eta_invariant(dim: int, rho: RationalLike) -> Fraction:
    """
    Dirac eta invariant on the Berger sphere of odd dimension dim >= 3.

    Raises:
        InvalidInputError: For even or too small dimensions
        IntegrityError: If the four routes disagree
    """
    if dim < 3 or dim % 2 == 0:
        raise InvalidInputError(f"Berger sphere dimension must be odd and >= 3, got {dim}")

    n = (dim + 1) // 2
    record = compute_coefficient(n, rho)
    if not record.agreed:
        raise IntegrityError(
            f"Routes disagree for n={n}: weingart={format_rational(record.c_weingart)}, "
            f"habel={format_rational(record.c_habel)}, "
            f"bernoulli={format_rational(record.c_bernoulli)}, "
            f"dnumber={format_rational(record.c_dnumber)}"
        )
    return record.eta


def conformal_anomaly(n: int) -> Fraction:
    """
    Dirac zeta(0) on the round n-sphere, 2^(n/2) c_n, spin factors included.

    n = 2 is refused: the relation to c_2 holds only up to an unexplained sign.
    """
    if n % 2 or n < 4:
        raise InvalidInputError(f"Conformal anomaly needs even n >= 4, got {n}")
    return pow_int(2, n // 2) * eta_invariant(2 * n - 1, 1)
