"""Eta coefficient routes, reference tables and result models."""

from .eta_engine import (
    c_bernoulli,
    c_dnumber,
    c_habel,
    c_weingart,
    compute_coefficient,
    conformal_anomaly,
    eta_invariant,
)
from .models import EtaCoefficient, VerificationReport
from .reference_tables import reference_tables, load_reference_tables

__all__ = [
    "c_bernoulli",
    "c_dnumber",
    "c_habel",
    "c_weingart",
    "compute_coefficient",
    "conformal_anomaly",
    "eta_invariant",
    "EtaCoefficient",
    "VerificationReport",
    "reference_tables",
    "load_reference_tables",
]
