"""
Pydantic models for hyperck configuration, JSON payloads and reports.
"""

from hyperck.models.config import CheckKind, Operation, RunConfig, SettingSpec, Suite
from hyperck.models.payloads import (
    ExtensionResult,
    PolyPayload,
    StemPayload,
    TermPayload,
    ambient_from_payload,
    element_from_payload,
    format_rational,
    parse_rational,
    poly_from_payload,
    poly_to_payload,
    stem_from_payload,
    stem_to_payload,
)
from hyperck.models.reports import (
    AlgebraInfo,
    BasisConditionModel,
    CheckReport,
    Counterexample,
    DiagramReport,
    IdentityCheck,
    KernelReport,
    LawResult,
    VerificationReport,
)

__all__ = [
    # Config
    "SettingSpec",
    "RunConfig",
    "Operation",
    "Suite",
    "CheckKind",
    # Payloads
    "TermPayload",
    "PolyPayload",
    "StemPayload",
    "ExtensionResult",
    "parse_rational",
    "format_rational",
    "element_from_payload",
    "poly_from_payload",
    "ambient_from_payload",
    "poly_to_payload",
    "stem_to_payload",
    "stem_from_payload",
    # Reports
    "IdentityCheck",
    "DiagramReport",
    "Counterexample",
    "LawResult",
    "VerificationReport",
    "CheckReport",
    "KernelReport",
    "BasisConditionModel",
    "AlgebraInfo",
]
