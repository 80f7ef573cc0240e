"""
Builders for small exact test inputs.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from typing import Union

from hyperck.algebra.descriptor import AlgebraDescriptor
from hyperck.algebra.element import AlgebraElement
from hyperck.algebra.setting import HypercomplexSetting
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly
from hyperck.stem.pair import StemPair

Coeff = Union[int, str, Fraction, Mapping[str, Union[int, str, Fraction]]]


def element(algebra: AlgebraDescriptor, value: Coeff) -> AlgebraElement:
    """A rational scalar, or a {label: rational} map."""
    if isinstance(value, Mapping):
        return AlgebraElement.from_labels(algebra, {k: Fraction(v) for k, v in value.items()})
    return AlgebraElement.scalar(algebra, Fraction(value))


def ambient(setting: HypercomplexSetting, terms: Mapping[tuple[int, ...], Coeff]) -> AmbientPoly:
    """Ambient polynomial from full-length monomials."""
    return AmbientPoly(setting, {mon: element(setting.algebra, c) for mon, c in terms.items()})


def seed(setting: HypercomplexSetting, terms: Mapping[tuple[int, ...], Coeff]) -> AmbientPoly:
    """Seed polynomial from monomials in x_0..x_p only."""
    pad = (0,) * setting.q
    return ambient(setting, {mon + pad: c for mon, c in terms.items()})


def slots(setting: HypercomplexSetting, terms: Mapping[tuple[int, ...], Coeff]) -> AlgebraPoly:
    """Stem slot polynomial in (x_0..x_p, u)."""
    return AlgebraPoly(
        setting.algebra, setting.stem_nvars, {mon: element(setting.algebra, c) for mon, c in terms.items()}
    )


def stem(
    setting: HypercomplexSetting,
    g1: Mapping[tuple[int, ...], Coeff],
    g2: Mapping[tuple[int, ...], Coeff],
) -> StemPair:
    return StemPair(setting, slots(setting, g1), slots(setting, g2))


def vector_part(setting: HypercomplexSetting, coeff: Coeff = 1) -> AmbientPoly:
    """coeff * x_q, x_q = sum_{s>p} x_s v_s."""
    return AmbientPoly.vector_part(setting).scale(Fraction(coeff))  # type: ignore[arg-type, return-value]


def rho(setting: HypercomplexSetting) -> AmbientPoly:
    """sum_{s>p} x_s^2."""
    terms = {}
    for s in range(setting.p + 1, setting.m + 1):
        mon = [0] * setting.nvars
        mon[s] = 2
        terms[tuple(mon)] = 1
    return ambient(setting, terms)
