"""
Configuration models for hyperck runs.

A setting string names the algebra and the (p, q) split:

    clifford:n=5,m=5,p=2    Clifford R_{0,5}, v_1..v_5, slice base x_0..x_2
    clifford:n=3            m defaults to n, p to 0
    octonion,m=7,p=4        m defaults to 7

RunConfig bundles the setting with the operation, paths and the knobs of the
randomized suites.
"""

from __future__ import annotations

import re
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from hyperck.algebra.descriptor import OCTONION_GENERATORS, AlgebraKind
from hyperck.algebra.setting import HypercomplexSetting
from hyperck.errors import PayloadError
from hyperck.limits import MAX_GENERATORS

_SETTING_RE = re.compile(r"^\s*(?P<kind>[a-zA-Z]+)\s*(?:[:,]\s*(?P<rest>.*))?$")


class Operation(str, Enum):
    """CLI operation."""
    ALGEBRA_INFO = "algebra-info"
    CK_EXTEND = "ck-extend"
    GCK_EXTEND = "gck-extend"
    HGCK_EXTEND = "hgck-extend"
    FUETER_SCE = "fueter-sce"
    FUETER_POLY = "fueter-poly"
    KERNEL = "kernel"
    CHECK = "check"
    VERIFY = "verify-theorems"


class Suite(str, Enum):
    """Randomized law suite."""
    ALGEBRA = "algebra"
    POLY = "poly"
    OPERATORS = "operators"
    CK = "ck"
    GCK = "gck"
    HGCK = "hgck"
    FUETER = "fueter"
    FUETER_SCE = "fueter-sce"
    DIAGRAMS = "diagrams"
    KERNELS = "kernels"
    REPRESENTATION = "representation"
    ALL = "all"


ODD_Q_SUITES = {Suite.FUETER_SCE, Suite.DIAGRAMS}


class CheckKind(str, Enum):
    """Property tested by `check`."""
    MONOGENIC = "monogenic"
    HARMONIC = "harmonic"
    GPS_REGULAR = "gps-regular"


class SettingSpec(BaseModel):
    """Algebra kind, generator count and the (m, p) split."""
    kind: AlgebraKind = Field(..., description="Algebra family")
    n: int = Field(..., ge=1, description="Number of imaginary generators of the algebra")
    m: int = Field(..., ge=1, description="Imaginary units in the hypercomplex basis")
    p: int = Field(default=0, ge=0, description="Last slice-base index")

    @model_validator(mode="after")
    def check_split(self) -> SettingSpec:
        """Validate the split against the algebra."""
        if self.p >= self.m:
            raise ValueError(f"p must be < m, got p={self.p}, m={self.m}")
        if self.kind is AlgebraKind.CLIFFORD and not self.m <= self.n <= MAX_GENERATORS:
            raise ValueError(f"Clifford settings need m <= n <= {MAX_GENERATORS}, got m={self.m}, n={self.n}")
        octonion = self.kind is AlgebraKind.OCTONION
        if octonion and (self.n != OCTONION_GENERATORS or self.m > OCTONION_GENERATORS):
            raise ValueError(f"Octonion settings need m <= {OCTONION_GENERATORS}, got m={self.m}")
        return self

    @property
    def q(self) -> int:
        return self.m - self.p

    @classmethod
    def parse(cls, text: str) -> SettingSpec:
        """
        Parse a setting string.

        Raises:
            PayloadError: unknown kind, key or malformed value
        """
        match = _SETTING_RE.match(text)
        if match is None:
            raise PayloadError(f"Malformed setting string: {text!r}")
        try:
            kind = AlgebraKind(match.group("kind").lower())
        except ValueError:
            raise PayloadError(f"Unknown algebra kind in {text!r}") from None
        values: dict[str, int] = {}
        rest = match.group("rest") or ""
        for part in filter(None, (s.strip() for s in rest.split(","))):
            key, sep, raw = part.partition("=")
            key = key.strip()
            if not sep or key not in {"n", "m", "p"}:
                raise PayloadError(f"Bad setting entry {part!r} in {text!r}")
            try:
                values[key] = int(raw)
            except ValueError:
                raise PayloadError(f"Setting entry {part!r} is not an integer") from None
        if kind is AlgebraKind.OCTONION:
            n = OCTONION_GENERATORS
            m = values.get("m", OCTONION_GENERATORS)
        else:
            if "n" not in values and "m" not in values:
                raise PayloadError(f"Clifford setting needs n or m: {text!r}")
            m = values.get("m", values.get("n", 0))
            n = values.get("n", m)
        return cls(kind=kind, n=n, m=m, p=values.get("p", 0))

    def to_setting(self) -> HypercomplexSetting:
        return HypercomplexSetting.build(self.kind, self.m, self.p, self.n)

    def with_q(self, q: int) -> SettingSpec:
        """Same family and p with q vector variables; Clifford n grows as needed."""
        m = self.p + q
        n = max(self.n, m) if self.kind is AlgebraKind.CLIFFORD else self.n
        return SettingSpec(kind=self.kind, n=n, m=m, p=self.p)

    def __str__(self) -> str:
        if self.kind is AlgebraKind.CLIFFORD:
            return f"clifford:n={self.n},m={self.m},p={self.p}"
        return f"octonion,m={self.m},p={self.p}"


class RunConfig(BaseModel):
    """
    Everything a CLI command needs.

    Suites that apply the Fueter-Sce map only accept odd q.
    """
    setting: SettingSpec = Field(..., description="Algebra and split")
    operation: Operation = Field(..., description="Command to run")
    input_path: Optional[Path] = Field(default=None, description="JSON input file")
    second_input_path: Optional[Path] = Field(default=None, description="Second seed (A1) for hgck-extend")
    output_path: Optional[Path] = Field(default=None, description="JSON output file; stdout when unset")
    suites: list[Suite] = Field(default_factory=lambda: [Suite.ALL], description="Suites to run")
    trials: int = Field(default=20, ge=1, description="Trials per law")
    degree: int = Field(default=4, ge=0, le=8, description="Degree bound of random polynomials")
    seed: int = Field(default=0, description="Base seed")
    q_values: list[int] = Field(default_factory=list, description="q values for q-dependent suites")
    multi_index: list[int] = Field(default_factory=list, description="Fueter-polynomial multi-index")
    right_comb: bool = Field(default=False, description="Build Fueter polynomials with right combs")
    kernel_order: int = Field(default=1, ge=1, description="Kernel order k")
    dirac_power: int = Field(default=0, ge=0, description="Dirac power to check on the kernel")
    slice_kernel: bool = Field(default=False, description="Use the slice kernel family")
    check_kind: Optional[CheckKind] = Field(default=None, description="Property for `check`")
    stem_input: bool = Field(default=False, description="Input is a stem payload")

    @field_validator("q_values")
    @classmethod
    def q_positive(cls, v: list[int]) -> list[int]:
        """Every q must be at least 1."""
        if any(q < 1 for q in v):
            raise ValueError(f"q values must be >= 1, got {v}")
        return sorted(set(v))

    @model_validator(mode="after")
    def odd_q_guard(self) -> RunConfig:
        """Suites that apply the Fueter-Sce map only accept odd q."""
        if self.operation is Operation.VERIFY and (set(self.suites) & ODD_Q_SUITES):
            even = [q for q in self.q_values if q % 2 == 0]
            if even:
                raise ValueError(f"odd q required for the diagrams and fueter-sce suites, got {even}")
        return self

    def expanded_suites(self) -> list[Suite]:
        """Suites to run, with `all` expanded, in declaration order."""
        if Suite.ALL in self.suites:
            return [s for s in Suite if s is not Suite.ALL]
        return [s for s in Suite if s in self.suites]
