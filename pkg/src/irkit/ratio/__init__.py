"""Certified information-ratio bounds, equivalences, metrics, criticality."""

from .certificates import CertificateError, verify_certificate
from .critical import CERTIFIED_CRITICAL, CriticalityReport, criticality_check
from .engine import (
    Endpoint,
    RatioBounds,
    Workspace,
    ir_bounds,
    separation_lower,
    concat_lower,
    product_sum_lower,
    reverse_product_lower,
    power_union_lower,
)
from .equivalence import (
    CERTIFIED_EQUIVALENT,
    CERTIFIED_INEQUIVALENT,
    UNKNOWN,
    EquivalenceReport,
    MetricIntervals,
    SpectrumEntry,
    core_spectra,
    equivalence_check,
    metric_eval,
    spectra_consistent_with_order,
)

__all__ = [
    "CERTIFIED_CRITICAL",
    "CERTIFIED_EQUIVALENT",
    "CERTIFIED_INEQUIVALENT",
    "CertificateError",
    "CriticalityReport",
    "Endpoint",
    "EquivalenceReport",
    "MetricIntervals",
    "RatioBounds",
    "SpectrumEntry",
    "UNKNOWN",
    "Workspace",
    "concat_lower",
    "core_spectra",
    "criticality_check",
    "equivalence_check",
    "ir_bounds",
    "metric_eval",
    "power_union_lower",
    "product_sum_lower",
    "reverse_product_lower",
    "separation_lower",
    "spectra_consistent_with_order",
    "verify_certificate",
]
