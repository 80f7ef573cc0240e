"""
Cauchy-Kovalevskaya extension of a polynomial seed f0(x_0, ..., x_p).

    G1 = sum_k (-1)^k u^k / (2k)!   Delta_p^k f0
    G2 = sum_k (-1)^k u^k / (2k+1)! Delta_p^k D_p f0

The sums stop once Delta_p^k f0 vanishes, so k runs to deg(f0) / 2 at most.
The result is GPS-regular and its u = 0 trace is f0.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial

from hyperck.algebra.setting import HypercomplexSetting
from hyperck.operators.dirac import dirac_p, dirac_p_right, laplacian_p
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly
from hyperck.stem.pair import StemPair, seed_to_slots, zero_slots

logger = logging.getLogger(__name__)


def _series(setting: HypercomplexSetting, g: AlgebraPoly, offset: int) -> AlgebraPoly:
    """sum_k (-1)^k u^k Delta_p^k g / (2k + offset)!"""
    total = zero_slots(setting)
    k = 0
    while not g.is_zero():
        term = g.times_variable(setting.u_slot, k).scale(Fraction((-1) ** k, factorial(2 * k + offset)))
        total = total + term
        g = laplacian_p(setting, g)
        k += 1
    return total


def ck_extend(f0: AmbientPoly) -> StemPair:
    """
    Stem of CK[f0].

    Args:
        f0: ambient polynomial using only x_0..x_p

    Raises:
        VariableRangeError: f0 mentions a vector variable
    """
    setting = f0.setting
    g = seed_to_slots(f0)
    stem = StemPair(
        setting,
        _series(setting, g, 0),
        _series(setting, dirac_p(setting, g), 1),
    )
    logger.debug("CK extension of degree %d seed: %d + %d terms", f0.degree(), len(stem.G1), len(stem.G2))
    return stem


def ck_extend_right(f0: AmbientPoly) -> StemPair:
    """
    Stem of the right CK extension; the odd series uses f0 D_p.

    Read it with materialize_right: G1(x_p, rho) + G2(x_p, rho) x_q.
    """
    setting = f0.setting
    g = seed_to_slots(f0)
    return StemPair(
        setting,
        _series(setting, g, 0),
        _series(setting, dirac_p_right(setting, g), 1),
    )


def restrict_to_base(f: AmbientPoly) -> AmbientPoly:
    """f on x_q = 0."""
    setting = f.setting
    return f.restrict_zero(range(setting.p + 1, setting.m + 1))  # type: ignore[return-value]
