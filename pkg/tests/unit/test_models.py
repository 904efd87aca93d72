"""
Tests for the result models.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from berger_eta.services.models import EtaCoefficient, VerificationReport


def _record(**overrides):
    values = dict(
        n=2,
        dim=3,
        c_weingart=Fraction(-1, 6),
        c_habel=Fraction(-1, 6),
        c_bernoulli=Fraction(-1, 6),
        c_dnumber=Fraction(-1, 6),
        agreed=True,
        eta=Fraction(-1, 6),
    )
    values.update(overrides)
    return EtaCoefficient(**values)


@pytest.mark.unit
class TestEtaCoefficient:
    """Consistency rules and serialization."""

    def test_valid(self):
        record = _record()
        assert record.c == Fraction(-1, 6)

    def test_dim_must_match(self):
        with pytest.raises(ValidationError):
            _record(dim=5)

    def test_agreed_must_reflect_routes(self):
        with pytest.raises(ValidationError):
            _record(c_habel=Fraction(1, 6))
        record = _record(c_habel=Fraction(1, 6), agreed=False, eta=None)
        assert not record.agreed

    def test_anomaly_follows_coefficient(self):
        c4 = Fraction(11, 360)
        record = _record(
            n=4, dim=7, c_weingart=c4, c_habel=c4, c_bernoulli=c4, c_dnumber=c4,
            eta=c4, anomaly=Fraction(11, 90),
        )
        assert record.model_dump()["anomaly"] == "11/90"

    @pytest.mark.parametrize("anomaly", [None, Fraction(11, 180), Fraction(-11, 90)])
    def test_wrong_anomaly_rejected(self, anomaly):
        c4 = Fraction(11, 360)
        with pytest.raises(ValidationError, match="anomaly"):
            _record(
                n=4, dim=7, c_weingart=c4, c_habel=c4, c_bernoulli=c4, c_dnumber=c4,
                eta=c4, anomaly=anomaly,
            )

    def test_no_anomaly_below_four(self):
        with pytest.raises(ValidationError, match="anomaly"):
            _record(anomaly=Fraction(-1, 3))

    def test_no_anomaly_when_routes_disagree(self):
        c4 = Fraction(11, 360)
        with pytest.raises(ValidationError, match="anomaly"):
            _record(
                n=4, dim=7, c_weingart=c4, c_habel=c4 + 1, c_bernoulli=c4, c_dnumber=c4,
                agreed=False, eta=None, anomaly=Fraction(11, 90),
            )

    def test_serializes_as_text(self):
        dumped = _record().model_dump()
        assert dumped["c_weingart"] == "-1/6"
        assert dumped["rho"] == "1/1"
        assert dumped["anomaly"] is None

    def test_frozen(self):
        record = _record()
        with pytest.raises(ValidationError):
            record.n = 4


@pytest.mark.unit
class TestVerificationReport:
    """Aggregate flags."""

    def test_ok_by_default(self):
        assert VerificationReport(max_n=2).ok

    def test_first_failure_kept(self):
        report = VerificationReport(max_n=2)
        report.golden_c_ok = False
        report.record_failure("first")
        report.record_failure("second")
        assert not report.ok
        assert report.first_failure == "first"

    def test_rho_samples_serialized(self):
        report = VerificationReport(max_n=2, rho_samples=[Fraction(-3, 7)])
        assert report.model_dump()["rho_samples"] == ["-3/7"]
