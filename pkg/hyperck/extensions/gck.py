"""
Generalized and harmonic generalized CK extensions.

The gamma-function ratios of the series reduce to exact rationals:

    even weight  c_k = 1 / ((2k)!! * q (q+2) ... (q+2k-2))
    odd weight   d_k = 1 / ((2k)!! * (q+2) (q+4) ... (q+2k))

GCK[A0] has coefficients A_{2k} = c_k Delta_p^k A0 and A_{2k+1} = D_p A_{2k} / (2k+q);
HGCK[A0, A1] has A_{2k} = c_k Delta_p^k A0 and B_k = d_k Delta_p^k A1. In both
cases the stem is G1 = sum_k (-1)^k u^k A_{2k}, G2 = sum_k (-1)^k u^k (odd coefficient k).
"""

from __future__ import annotations

import logging
from fractions import Fraction

from hyperck.algebra.setting import HypercomplexSetting
from hyperck.errors import SettingMismatchError
from hyperck.operators.dirac import dirac_p, dirac_split, laplacian_p
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly
from hyperck.stem.pair import StemPair, materialize, seed_to_slots, slots_to_seed, zero_slots

logger = logging.getLogger(__name__)


def even_weight(q: int, k: int) -> Fraction:
    """1 / ((2k)!! q (q+2) ... (q+2k-2))."""
    w = Fraction(1)
    for j in range(k):
        w /= (2 * j + 2) * (q + 2 * j)
    return w


def odd_weight(q: int, k: int) -> Fraction:
    """1 / ((2k)!! (q+2) ... (q+2k))."""
    w = Fraction(1)
    for j in range(k):
        w /= (2 * j + 2) * (q + 2 * j + 2)
    return w


def _laplacian_terms(setting: HypercomplexSetting, g: AlgebraPoly) -> list[AlgebraPoly]:
    """[g, Delta_p g, Delta_p^2 g, ...] up to the last nonzero entry."""
    out = []
    while not g.is_zero():
        out.append(g)
        g = laplacian_p(setting, g)
    return out


def _assemble(setting: HypercomplexSetting, even: list[AlgebraPoly], odd: list[AlgebraPoly]) -> StemPair:
    def signed(coeffs: list[AlgebraPoly]) -> AlgebraPoly:
        total = zero_slots(setting)
        for k, a in enumerate(coeffs):
            total = total + a.times_variable(setting.u_slot, k).scale((-1) ** k)
        return total

    return StemPair(setting, signed(even), signed(odd))


def _gck_slots(setting: HypercomplexSetting, g: AlgebraPoly) -> tuple[list[AlgebraPoly], list[AlgebraPoly]]:
    q = setting.q
    even = [a.scale(even_weight(q, k)) for k, a in enumerate(_laplacian_terms(setting, g))]
    odd = [dirac_p(setting, a).scale(Fraction(1, 2 * k + q)) for k, a in enumerate(even)]
    return even, odd


def gck_coefficients(A0: AmbientPoly) -> list[AmbientPoly]:
    """A_0, A_1, A_2, ... of GCK[A0], interleaved even/odd."""
    setting = A0.setting
    even, odd = _gck_slots(setting, seed_to_slots(A0))
    out: list[AmbientPoly] = []
    for a, b in zip(even, odd):
        out.append(slots_to_seed(setting, a))
        out.append(slots_to_seed(setting, b))
    while out and out[-1].is_zero():
        out.pop()
    return out


def gck_stem(A0: AmbientPoly) -> StemPair:
    """Stem of the generalized CK extension; vekua_check holds on it."""
    setting = A0.setting
    even, odd = _gck_slots(setting, seed_to_slots(A0))
    return _assemble(setting, even, odd)


def gck_extend(A0: AmbientPoly) -> AmbientPoly:
    """GCK[A0]: the monogenic function whose x_q = 0 trace is A0."""
    f = materialize(gck_stem(A0))
    logger.debug("GCK extension in %s: %d terms", A0.setting.name, len(f))
    return f


def hgck_stem(A0: AmbientPoly, A1: AmbientPoly) -> StemPair:
    """Stem of the harmonic generalized CK extension HGCK[A0, A1]."""
    setting = A0.setting
    if A1.setting != setting:
        raise SettingMismatchError(f"Seeds in settings {setting.name} and {A1.setting.name}")
    q = setting.q
    even = [a.scale(even_weight(q, k)) for k, a in enumerate(_laplacian_terms(setting, seed_to_slots(A0)))]
    odd = [b.scale(odd_weight(q, k)) for k, b in enumerate(_laplacian_terms(setting, seed_to_slots(A1)))]
    return _assemble(setting, even, odd)


def hgck_extend(A0: AmbientPoly, A1: AmbientPoly) -> AmbientPoly:
    """HGCK[A0, A1]: harmonic, trace A0 and D_{x_q} slope -q A1 on x_q = 0."""
    f = materialize(hgck_stem(A0, A1))
    logger.debug("HGCK extension in %s: %d terms", A0.setting.name, len(f))
    return f


def initial_data(f: AmbientPoly) -> tuple[AmbientPoly, AmbientPoly]:
    """(f, D_{x_q} f) restricted to x_q = 0."""
    setting = f.setting
    vector = range(setting.p + 1, setting.m + 1)
    _, slope = dirac_split(f)
    return f.restrict_zero(vector), slope.restrict_zero(vector)  # type: ignore[return-value]
