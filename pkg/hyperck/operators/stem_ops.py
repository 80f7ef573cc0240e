"""
Operators on stem pairs in the u-encoding.

With F1(x_p, r) = G1(x_p, r^2) and F2(x_p, r) = r G2(x_p, r^2) the radial
derivatives become polynomial in u = r^2:

    d_r F1 = 2 r G1',        (1/r) d_r F1 = 2 G1'
    d_r F2 = G2 + 2u G2',    (d_r (1/r)) F2 = r (2 G2')

where ' is d/du. Every form here is cross-checked in the tests against
materialize -> ambient operator -> extract. docs/DERIVATIONS.md has the steps.
"""

from __future__ import annotations

from hyperck.algebra.setting import HypercomplexSetting
from hyperck.errors import VariableRangeError
from hyperck.operators.dirac import dirac_bar_p, dirac_p, laplacian_p
from hyperck.poly.ambient import AlgebraPoly
from hyperck.stem.pair import StemPair


def d_u(setting: HypercomplexSetting, g: AlgebraPoly) -> AlgebraPoly:
    return g.derivative(setting.u_slot)


def times_u(setting: HypercomplexSetting, g: AlgebraPoly, power: int = 1) -> AlgebraPoly:
    return g.times_variable(setting.u_slot, power)


def _radial_step(setting: HypercomplexSetting, g: AlgebraPoly) -> AlgebraPoly:
    """G + 2u G': u-form of d_r (r G(x_p, r^2))."""
    return g + times_u(setting, d_u(setting, g)).scale(2)


def radial_iterate(S: StemPair, k: int) -> StemPair:
    """
    (A_k, B_k) with A_k = ((1/r) d_r)^k F1 and B_k = (d_r (1/r))^k F2.

    In the u-encoding both reduce to (2 d_u)^k on the components.
    """
    if k < 0:
        raise VariableRangeError(f"Radial iterate needs k >= 0, got {k}")
    setting = S.setting
    g1, g2 = S.G1, S.G2
    for _ in range(k):
        g1 = d_u(setting, g1).scale(2)
        g2 = d_u(setting, g2).scale(2)
    return StemPair(setting, g1, g2)


# Cauchy-Riemann and Vekua systems

def cr_residual(S: StemPair) -> StemPair:
    """(D_p G1 - G2 - 2u G2', D-bar_p G2 + 2 G1'); zero iff S is GPS-regular."""
    setting = S.setting
    first = dirac_p(setting, S.G1) - _radial_step(setting, S.G2)
    second = dirac_bar_p(setting, S.G2) + d_u(setting, S.G1).scale(2)
    return StemPair(setting, first, second)


def vekua_residual(S: StemPair) -> StemPair:
    """(D_p G1 - q G2 - 2u G2', D-bar_p G2 + 2 G1'); zero iff materialize(S) is monogenic."""
    return stem_dirac(S)


def cr_check(S: StemPair) -> bool:
    return cr_residual(S).is_zero()


def vekua_check(S: StemPair) -> bool:
    return vekua_residual(S).is_zero()


def inter_relation_residual(S: StemPair, k: int) -> AlgebraPoly:
    """D_p A_k - B_k - 2u B_k' - 2k B_k; zero for GPS-regular S."""
    setting = S.setting
    it = radial_iterate(S, k)
    return dirac_p(setting, it.G1) - _radial_step(setting, it.G2) - it.G2.scale(2 * k)


# Stem images of ambient operators

def stem_dirac(S: StemPair) -> StemPair:
    """Stem of D f for f = materialize(S)."""
    setting = S.setting
    g2_prime = d_u(setting, S.G2)
    even = dirac_p(setting, S.G1) - S.G2.scale(setting.q) - times_u(setting, g2_prime).scale(2)
    odd = dirac_bar_p(setting, S.G2) + d_u(setting, S.G1).scale(2)
    return StemPair(setting, even, odd)


def stem_dirac_bar(S: StemPair) -> StemPair:
    """Stem of D-bar f for f = materialize(S)."""
    setting = S.setting
    g2_prime = d_u(setting, S.G2)
    even = dirac_bar_p(setting, S.G1) + S.G2.scale(setting.q) + times_u(setting, g2_prime).scale(2)
    odd = dirac_p(setting, S.G2) - d_u(setting, S.G1).scale(2)
    return StemPair(setting, even, odd)


def _radial_laplacian(setting: HypercomplexSetting, g: AlgebraPoly, first: int) -> AlgebraPoly:
    """Delta_p g + first * g' + 4u g''."""
    g_prime = d_u(setting, g)
    return (
        laplacian_p(setting, g)
        + g_prime.scale(first)
        + times_u(setting, d_u(setting, g_prime)).scale(4)
    )


def stem_laplacian(S: StemPair) -> StemPair:
    """Stem of the ambient Laplacian of materialize(S)."""
    setting = S.setting
    q = setting.q
    return StemPair(
        setting,
        _radial_laplacian(setting, S.G1, 2 * q),
        _radial_laplacian(setting, S.G2, 2 * q + 4),
    )


def slice_laplacian_stem(S: StemPair) -> StemPair:
    """(Delta_{x'} F1, Delta_{x'} F2) in the variables (x_p, r), u-encoded."""
    setting = S.setting
    return StemPair(
        setting,
        _radial_laplacian(setting, S.G1, 2),
        _radial_laplacian(setting, S.G2, 6),
    )
