"""
Fueter variables and Fueter polynomials.

z_l = x_l + sum_{s>p} x_s (v_s v_l) is CK[x_l]. The Fueter polynomial of a
multi-index k over 0..p averages the products of Fueter variables over the
distinguishable orderings of k; it equals V_k = CK[x_p^k] / k!.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from itertools import permutations
from math import factorial, prod

from hyperck.algebra.element import mul
from hyperck.algebra.setting import HypercomplexSetting
from hyperck.errors import VariableRangeError
from hyperck.extensions.ck import ck_extend
from hyperck.poly.ambient import AmbientPoly
from hyperck.poly.assoc import AssocTree, assoc_product
from hyperck.stem.pair import materialize


def _check_index(setting: HypercomplexSetting, ell: int) -> None:
    if not 0 <= ell <= setting.p:
        raise VariableRangeError(f"Fueter variable index {ell} outside 0..{setting.p}")


def fueter_variable(setting: HypercomplexSetting, ell: int) -> AmbientPoly:
    """z_l = x_l + sum_{s>p} x_s (v_s v_l)."""
    _check_index(setting, ell)
    z = AmbientPoly.variable_in(setting, ell)
    for s in range(setting.p + 1, setting.m + 1):
        z = z + AmbientPoly.variable_in(setting, s, mul(setting.v[s], setting.v[ell]))
    return z


def fueter_variable_right(setting: HypercomplexSetting, ell: int) -> AmbientPoly:
    """z_l^R = x_l + sum_{s>p} x_s (v_l v_s)."""
    _check_index(setting, ell)
    z = AmbientPoly.variable_in(setting, ell)
    for s in range(setting.p + 1, setting.m + 1):
        z = z + AmbientPoly.variable_in(setting, s, mul(setting.v[ell], setting.v[s]))
    return z


def _check_multi_index(setting: HypercomplexSetting, k: Sequence[int]) -> tuple[int, ...]:
    if len(k) != setting.p + 1:
        raise VariableRangeError(f"Multi-index needs {setting.p + 1} entries, got {len(k)}")
    return tuple(int(x) for x in k)


def seed_monomial(setting: HypercomplexSetting, k: Sequence[int]) -> AmbientPoly:
    """x_p^k = x_0^{k_0} ... x_p^{k_p} as an ambient polynomial."""
    k = _check_multi_index(setting, k)
    return AmbientPoly.constant_in(setting, 1).times_monomial(k + (0,) * setting.q)  # type: ignore[return-value]


def fueter_polynomial(
    setting: HypercomplexSetting,
    k: Sequence[int],
    tree: AssocTree | None = None,
    right: bool = False,
) -> AmbientPoly:
    """
    P_k = (1/|k|!) sum over distinguishable orderings (i_1..i_|k|) of z_{i_1} ... z_{i_|k|}.

    Args:
        setting: hypercomplex setting
        k: multi-index of length p+1; any negative entry gives the zero polynomial
        tree: association of each product, left comb by default
        right: build from right Fueter variables instead
    """
    k = _check_multi_index(setting, k)
    if any(x < 0 for x in k):
        return AmbientPoly.zero_in(setting)
    total_degree = sum(k)
    if total_degree == 0:
        return AmbientPoly.constant_in(setting, 1)
    build = fueter_variable_right if right else fueter_variable
    variables = [build(setting, ell) for ell in range(setting.p + 1)]
    word = [ell for ell, count in enumerate(k) for _ in range(count)]
    total = AmbientPoly.zero_in(setting)
    for order in sorted(set(permutations(word))):
        total = total + assoc_product([variables[i] for i in order], tree)
    return total.scale(Fraction(1, factorial(total_degree)))  # type: ignore[return-value]


def v_polynomial(setting: HypercomplexSetting, k: Sequence[int]) -> AmbientPoly:
    """V_k = CK[x_p^k] / k!  with k! = k_0! ... k_p!."""
    k = _check_multi_index(setting, k)
    if any(x < 0 for x in k):
        return AmbientPoly.zero_in(setting)
    f = materialize(ck_extend(seed_monomial(setting, k)))
    return f.scale(Fraction(1, prod(factorial(x) for x in k)))  # type: ignore[return-value]


def multi_indices(p: int, degree: int) -> list[tuple[int, ...]]:
    """All multi-indices over 0..p with |k| = degree, in lexicographic order."""
    if p < 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for tail in multi_indices(p - 1, degree - first):
            out.append((first,) + tail)
    return sorted(out)
