"""
Pydantic models for computed coefficients and verification results.
"""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from berger_eta.algebra.exact_arith import format_rational, pow_int


class EtaCoefficient(BaseModel):
    """All four route values of c_n for one sphere, plus derived quantities."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(..., ge=1, description="Half of (dim + 1)")
    dim: int = Field(..., description="Berger sphere dimension 2n - 1")
    c_weingart: Fraction
    c_habel: Fraction
    c_bernoulli: Fraction
    c_dnumber: Fraction
    agreed: bool
    rho: Fraction = Fraction(1)
    eta: Optional[Fraction] = Field(None, description="c_n * rho^n when the routes agree")
    anomaly: Optional[Fraction] = Field(
        None,
        description="Dirac zeta(0) on the round S^n, 2^(n/2) c_n; only for even n >= 4"
    )

    @model_validator(mode="after")
    def check_consistency(self) -> "EtaCoefficient":
        if self.dim != 2 * self.n - 1:
            raise ValueError(f"dim must be 2n - 1, got dim={self.dim} for n={self.n}")
        routes = {self.c_weingart, self.c_habel, self.c_bernoulli, self.c_dnumber}
        if self.agreed != (len(routes) == 1):
            raise ValueError("agreed must be true exactly when all four routes coincide")
        expected = None
        if self.agreed and self.n % 2 == 0 and self.n >= 4:
            expected = pow_int(2, self.n // 2) * self.c_weingart
        if self.anomaly != expected:
            raise ValueError(
                f"anomaly must be 2^(n/2) c_n for agreed even n >= 4 and unset otherwise, "
                f"got {self.anomaly} for n={self.n}"
            )
        return self

    @property
    def c(self) -> Fraction:
        """The agreed value (route A when the routes differ)."""
        return self.c_weingart

    @field_serializer("c_weingart", "c_habel", "c_bernoulli", "c_dnumber", "rho")
    def serialize_rational(self, value: Fraction) -> str:
        return format_rational(value)

    @field_serializer("eta", "anomaly")
    def serialize_optional_rational(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else format_rational(value)


class VerificationReport(BaseModel):
    """Aggregate result of route agreement, golden tables and homogeneity checks."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    max_n: int
    rho_samples: List[Fraction] = Field(default_factory=list)
    coefficients: List[EtaCoefficient] = Field(default_factory=list)
    routes_ok: bool = True
    golden_c_ok: bool = True
    golden_zeta_ok: bool = True
    homogeneity_ok: bool = True
    golden_c_matched: int = 0
    golden_c_compared: int = 0
    golden_zeta_matched: int = 0
    golden_zeta_compared: int = 0
    first_failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.routes_ok and self.golden_c_ok and self.golden_zeta_ok and self.homogeneity_ok

    def record_failure(self, message: str) -> None:
        """Keep the first failure description only."""
        if self.first_failure is None:
            self.first_failure = message

    @field_serializer("rho_samples")
    def serialize_rhos(self, values: List[Fraction]) -> List[str]:
        return [format_rational(v) for v in values]
