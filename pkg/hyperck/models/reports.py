"""
Report models for checks, diagram verifications and randomized law suites.

Reports carry no timestamps or timings, so a rerun with the same
configuration dumps byte-identical JSON.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, computed_field


class IdentityCheck(BaseModel):
    """One exact identity between two computed routes."""
    name: str = Field(..., description="Identity name")
    passed: bool = Field(..., description="Whether both sides are exactly equal")
    lhs: str = Field(default="", description="Left side, pretty-printed")
    rhs: str = Field(default="", description="Right side, pretty-printed")
    description: str = Field(default="", description="What the identity states")


class DiagramReport(BaseModel):
    """
    Result of one commutative-diagram verification.

    Each check compares two independently computed routes.
    """
    theorem: str = Field(..., description="Diagram name (M, MH, H)")
    setting: str = Field(..., description="Setting string")
    q: int = Field(..., ge=1, description="Number of vector variables")
    seed: str = Field(..., description="Seed polynomial f0, pretty-printed")
    checks: list[IdentityCheck] = Field(default_factory=list, description="Identity checks")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_checks(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


class Counterexample(BaseModel):
    """Inputs and sides of a failing trial."""
    trial: int = Field(..., ge=0, description="Trial index within the law")
    data: dict[str, str] = Field(default_factory=dict, description="Named inputs and results")


class LawResult(BaseModel):
    """Outcome of one law over all its trials."""
    suite: str = Field(..., description="Suite the law belongs to")
    law: str = Field(..., description="Law name")
    setting: str = Field(..., description="Setting string")
    trials: int = Field(..., ge=0, description="Number of trials run")
    failures: list[Counterexample] = Field(default_factory=list, description="Failing trials")
    passed: bool = Field(..., description="True when no trial failed")


class VerificationReport(BaseModel):
    """Report of a verify-theorems run."""
    suites: list[str] = Field(..., description="Suites run")
    seed: int = Field(..., description="Base seed")
    trials: int = Field(..., ge=1, description="Trials per law")
    degree: int = Field(..., ge=0, description="Degree bound for random polynomials")
    q_values: list[int] = Field(default_factory=list, description="q values for q-dependent suites")
    results: list[LawResult] = Field(default_factory=list, description="Per-law results")
    passed: bool = Field(..., description="True when every law passed")

    @property
    def failed_laws(self) -> list[str]:
        return [f"{r.suite}/{r.law}@{r.setting}" for r in self.results if not r.passed]


class CheckReport(BaseModel):
    """Result of `check` on a polynomial or stem."""
    kind: str = Field(..., description="monogenic, harmonic or gps-regular")
    setting: str = Field(..., description="Setting string")
    passed: bool = Field(..., description="Whether the residual vanishes")
    residual: str = Field(..., description="Residual, pretty-printed")
    residual_payload: Optional[dict] = Field(default=None, description="Residual as JSON payload")


class KernelReport(BaseModel):
    """Kernel construction and its Dirac-power checks."""
    setting: str = Field(..., description="Setting string")
    kernel: str = Field(..., description="Kernel kind (poly or slice)")
    k: int = Field(..., ge=1, description="Kernel order")
    numerator: str = Field(..., description="Numerator, pretty-printed")
    exponent: int = Field(..., ge=0, description="Power s of |x|^-s")
    checks: list[IdentityCheck] = Field(default_factory=list, description="Dirac-power checks")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class BasisConditionModel(BaseModel):
    """A hypercomplex basis condition and its verdict."""
    name: str = Field(..., description="Condition")
    holds: bool = Field(..., description="Whether it holds")


class AlgebraInfo(BaseModel):
    """Summary of an algebra and, optionally, a setting."""
    algebra: str = Field(..., description="Algebra name")
    dim: int = Field(..., ge=1, description="Real dimension")
    labels: list[str] = Field(..., description="Basis labels in index order")
    generator_squares: dict[str, str] = Field(..., description="Square of each generator")
    setting: Optional[str] = Field(default=None, description="Setting string, if given")
    p: Optional[int] = Field(default=None, description="Slice-base index")
    q: Optional[int] = Field(default=None, description="Number of vector variables")
    basis_conditions: list[BasisConditionModel] = Field(
        default_factory=list, description="Hypercomplex-basis conditions"
    )
