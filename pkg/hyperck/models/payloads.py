"""
JSON payloads for polynomials and stems.

Rationals travel as strings ("3/2", "-1"); coefficients as maps from basis
labels to rationals. Terms are written in graded order, so the same value
always serializes to the same text.

    poly: {"nvars": 4, "variables": ["x0", ...], "terms": [{"monomial": [2, 0, 0, 0], "coeff": {"1": "1"}}]}
    stem: {"G1": poly, "G2": poly}, optionally tagged with "setting" and "u_slot"

A bare list of term entries is accepted wherever a poly payload is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from hyperck.algebra.descriptor import AlgebraDescriptor
from hyperck.algebra.element import AlgebraElement
from hyperck.algebra.setting import HypercomplexSetting
from hyperck.errors import HyperckError, PayloadError
from hyperck.models.config import SettingSpec
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly
from hyperck.stem.pair import StemPair, stem_names


class TermPayload(BaseModel):
    """One monomial with its algebra coefficient."""
    monomial: list[int] = Field(..., description="Exponent of each variable")
    coeff: dict[str, Union[str, int]] = Field(..., description="Basis label -> rational")


class PolyPayload(BaseModel):
    """A polynomial in named variables."""
    nvars: Optional[int] = Field(default=None, ge=1, description="Number of variables")
    variables: list[str] = Field(default_factory=list, description="Variable names")
    terms: list[TermPayload] = Field(default_factory=list, description="Terms in graded order")


class StemPayload(BaseModel):
    """A stem pair, optionally tagged with its setting."""
    setting: Optional[str] = Field(default=None, description="Setting string")
    u_slot: Optional[int] = Field(default=None, ge=1, description="Slot index of u (p + 1)")
    G1: PolyPayload = Field(..., description="Even component")
    G2: PolyPayload = Field(..., description="Odd component divided by r")


class ExtensionResult(BaseModel):
    """Output of the extension and construction commands."""
    operation: str = Field(..., description="Command that produced the result")
    setting: str = Field(..., description="Setting string")
    stem: Optional[StemPayload] = Field(default=None, description="Stem of the result, when slice")
    function: PolyPayload = Field(..., description="Result as an ambient polynomial")


def parse_rational(value: Any) -> Fraction:
    """
    Parse "num/den", an integer string or an int.

    Raises:
        PayloadError: zero denominator, floats, junk
    """
    if isinstance(value, bool):
        raise PayloadError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise PayloadError(f"Rationals must be strings or integers, got {value!r}")
    text = value.strip()
    num, sep, den = text.partition("/")
    try:
        numerator = int(num)
        denominator = int(den) if sep else 1
    except ValueError:
        raise PayloadError(f"Malformed rational {value!r}") from None
    if denominator == 0:
        raise PayloadError(f"Zero denominator in {value!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    return str(value)


def element_from_payload(algebra: AlgebraDescriptor, coeff: dict[str, Any]) -> AlgebraElement:
    try:
        return AlgebraElement.from_labels(algebra, {k: parse_rational(v) for k, v in coeff.items()})
    except PayloadError:
        raise
    except HyperckError as e:
        raise PayloadError(str(e)) from e


def _coerce_poly_payload(data: Any) -> PolyPayload:
    try:
        if isinstance(data, list):
            return PolyPayload(terms=[TermPayload.model_validate(t) for t in data])
        if isinstance(data, dict) and "monomial" in data:
            return PolyPayload(terms=[TermPayload.model_validate(data)])
        return PolyPayload.model_validate(data)
    except ValidationError as e:
        raise PayloadError(f"Malformed polynomial payload: {e}") from e


def poly_from_payload(algebra: AlgebraDescriptor, data: Any, nvars: int) -> AlgebraPoly:
    """Polynomial in exactly nvars variables."""
    payload = _coerce_poly_payload(data)
    if payload.nvars is not None and payload.nvars != nvars:
        raise PayloadError(f"Payload has {payload.nvars} variables, expected {nvars}")
    terms: dict[tuple[int, ...], AlgebraElement] = {}
    for term in payload.terms:
        mon = tuple(term.monomial)
        if len(mon) != nvars or any(e < 0 for e in mon):
            raise PayloadError(f"Monomial {list(mon)} invalid for {nvars} variables")
        elem = element_from_payload(algebra, term.coeff)
        terms[mon] = terms[mon] + elem if mon in terms else elem
    return AlgebraPoly(algebra, nvars, terms)


def ambient_from_payload(setting: HypercomplexSetting, data: Any, seed: bool = False) -> AmbientPoly:
    """
    Ambient polynomial; with seed=True monomials of length p+1 are padded to m+1.
    """
    payload = _coerce_poly_payload(data)
    if seed:
        width = setting.p + 1
        pad = [0] * setting.q
        for term in payload.terms:
            if len(term.monomial) == width:
                term.monomial = term.monomial + pad
        if payload.nvars == width:
            payload.nvars = setting.nvars
    poly = poly_from_payload(setting.algebra, payload.model_dump(), setting.nvars)
    return AmbientPoly.from_algebra_poly(setting, poly)


def poly_to_payload(poly: AlgebraPoly, names: Optional[list[str]] = None) -> PolyPayload:
    names = names if names is not None else [f"x{i}" for i in range(poly.nvars)]
    return PolyPayload(
        nvars=poly.nvars,
        variables=names,
        terms=[TermPayload(monomial=list(mon), coeff=c.to_labels()) for mon, c in poly.items()],
    )


def stem_to_payload(S: StemPair) -> StemPayload:
    names = stem_names(S.setting)
    return StemPayload(
        setting=S.setting.name,
        u_slot=S.setting.u_slot,
        G1=poly_to_payload(S.G1, names),
        G2=poly_to_payload(S.G2, names),
    )


def stem_from_payload(setting: HypercomplexSetting, data: Any) -> StemPair:
    """
    Raises:
        PayloadError: malformed payload, or a u_slot / setting tag disagreeing with `setting`
    """
    try:
        payload = StemPayload.model_validate(data)
    except ValidationError as e:
        raise PayloadError(f"Malformed stem payload: {e}") from e
    if payload.u_slot is not None and payload.u_slot != setting.u_slot:
        raise PayloadError(f"Stem has u_slot={payload.u_slot}, setting needs {setting.u_slot}")
    if payload.setting is not None:
        try:
            tagged = SettingSpec.parse(payload.setting).to_setting().name
        except PayloadError:
            raise
        except ValueError as e:
            raise PayloadError(f"Bad stem setting {payload.setting!r}: {e}") from e
        if tagged != setting.name:
            raise PayloadError(f"Stem is for {tagged}, command runs in {setting.name}")
    nslots = setting.stem_nvars
    return StemPair(
        setting,
        poly_from_payload(setting.algebra, payload.G1.model_dump(), nslots),
        poly_from_payload(setting.algebra, payload.G2.model_dump(), nslots),
    )
