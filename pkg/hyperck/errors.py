"""
Exception hierarchy for hyperck.

Every domain error is a ValueError, so callers that only catch ValueError
(as the CLI handlers do) keep working.
"""

from __future__ import annotations


class HyperckError(ValueError):
    """Base class for all hyperck errors."""


class UnsupportedAlgebraError(HyperckError):
    """Algebra kind or generator count not supported."""


class DimensionLimitError(HyperckError):
    """Algebra dimension exceeds the configured cap."""


class AlgebraMismatchError(HyperckError):
    """Operands live in different algebras."""


class SettingMismatchError(HyperckError):
    """Operands live in different hypercomplex settings."""


class VariableRangeError(HyperckError):
    """A variable index or polynomial support is outside the allowed range."""


class AssocTreeError(HyperckError):
    """Association tree does not match the operand count."""


class NotSliceFormError(HyperckError):
    """Polynomial is not of generalized partial-slice form."""

    def __init__(self, message: str, monomial: tuple[int, ...] | None = None):
        super().__init__(message)
        self.monomial = monomial


class OddQRequiredError(HyperckError):
    """Operation is only defined for odd q."""


class CRViolationError(HyperckError):
    """Stem does not satisfy the generalized Cauchy-Riemann system."""


class KelvinParityError(HyperckError):
    """Kelvin-type terms with denominator powers of different parity."""


class PayloadError(HyperckError):
    """Malformed JSON payload or rational literal."""
