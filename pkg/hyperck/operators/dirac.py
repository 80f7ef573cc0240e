"""
Differential operators on ambient polynomials.

D = sum_s v_s d_s and D-bar = sum_s v_s^c d_s act by left multiplication of
the coefficients; the right versions f D, f D-bar multiply on the right.
Real scalars associate with everything, so the componentwise definition and
the coefficientwise one agree.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations_with_replacement, permutations

from hyperck.algebra.element import AlgebraElement
from hyperck.algebra.setting import HypercomplexSetting, SpherePoint
from hyperck.errors import VariableRangeError
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly, Monomial
from hyperck.poly.assoc import AssocTree


def frame_sum(
    f: AlgebraPoly,
    units: Sequence[AlgebraElement],
    indices: Sequence[int],
    right: bool = False,
) -> AlgebraPoly:
    """sum_{s in indices} units[s] d_s f (or d_s f units[s] when right)."""
    total = f.zero_like()
    for s in indices:
        d = f.derivative(s)
        if d.is_zero():
            continue
        total = total + (d.right_mul(units[s]) if right else d.left_mul(units[s]))
    return total


# Full operators

def dirac(f: AmbientPoly) -> AmbientPoly:
    """D f = sum_{s=0}^m v_s d_s f."""
    return frame_sum(f, f.setting.v, range(f.setting.nvars))  # type: ignore[return-value]


def dirac_bar(f: AmbientPoly) -> AmbientPoly:
    """D-bar f = sum_{s=0}^m v_s^c d_s f."""
    return frame_sum(f, f.setting.v_conj, range(f.setting.nvars))  # type: ignore[return-value]


def dirac_right(f: AmbientPoly) -> AmbientPoly:
    """f D = sum_s (d_s f) v_s."""
    return frame_sum(f, f.setting.v, range(f.setting.nvars), right=True)  # type: ignore[return-value]


def dirac_bar_right(f: AmbientPoly) -> AmbientPoly:
    """f D-bar = sum_s (d_s f) v_s^c."""
    return frame_sum(f, f.setting.v_conj, range(f.setting.nvars), right=True)  # type: ignore[return-value]


def dirac_split(f: AmbientPoly) -> tuple[AmbientPoly, AmbientPoly]:
    """(D_{x_p} f, D_{x_q} f); their sum is D f."""
    setting = f.setting
    base = frame_sum(f, setting.v, range(setting.p + 1))
    vector = frame_sum(f, setting.v, range(setting.p + 1, setting.m + 1))
    return base, vector  # type: ignore[return-value]


def laplacian(f: AlgebraPoly) -> AlgebraPoly:
    """Sum of all unmixed second derivatives."""
    total = f.zero_like()
    for s in range(f.nvars):
        total = total + f.derivative(s).derivative(s)
    return total


def laplacian_power(f: AlgebraPoly, k: int) -> AlgebraPoly:
    for _ in range(k):
        f = laplacian(f)
    return f


def dirac_power(f: AmbientPoly, k: int, right: bool = False) -> AmbientPoly:
    """D^k f = D(D^{k-1} f); D^0 is the identity. right=True iterates f D."""
    if k < 0:
        raise VariableRangeError(f"Dirac power needs k >= 0, got {k}")
    step = dirac_right if right else dirac
    for _ in range(k):
        f = step(f)
    return f


def dirac_power_symmetrized(f: AmbientPoly, k: int, tree: AssocTree | None = None) -> AmbientPoly:
    """
    Grouped form of D^k: for every multi-index of order k, the sum over its
    distinguishable orderings (i_1..i_k) of (v_{i_1} ... v_{i_k} d^k f) folded
    along `tree` (k+1 leaves, default right comb).
    """
    setting = f.setting
    if k == 0:
        return f
    tree = tree or AssocTree.right_comb(k + 1)
    total = f.zero_like()
    for multiset in combinations_with_replacement(range(setting.nvars), k):
        deriv: AlgebraPoly = f
        for s in multiset:
            deriv = deriv.derivative(s)
        if deriv.is_zero():
            continue
        for order in sorted(set(permutations(multiset))):
            operands: list[AlgebraElement | AlgebraPoly] = [setting.v[i] for i in order]
            operands.append(deriv)
            total = total + tree.fold(operands, _mixed_product)  # type: ignore[arg-type]
    return total  # type: ignore[return-value]


def _mixed_product(
    a: AlgebraElement | AlgebraPoly, b: AlgebraElement | AlgebraPoly
) -> AlgebraElement | AlgebraPoly:
    if isinstance(a, AlgebraElement) and isinstance(b, AlgebraElement):
        return a * b
    if isinstance(a, AlgebraElement):
        return b.left_mul(a)  # type: ignore[union-attr]
    if isinstance(b, AlgebraElement):
        return a.right_mul(b)
    return a.mul(b)


# Operators on the slice base x_0..x_p; g may be ambient or a stem slot polynomial

def dirac_p(setting: HypercomplexSetting, g: AlgebraPoly) -> AlgebraPoly:
    return frame_sum(g, setting.v, range(setting.p + 1))


def dirac_bar_p(setting: HypercomplexSetting, g: AlgebraPoly) -> AlgebraPoly:
    return frame_sum(g, setting.v_conj, range(setting.p + 1))


def dirac_p_right(setting: HypercomplexSetting, g: AlgebraPoly) -> AlgebraPoly:
    return frame_sum(g, setting.v, range(setting.p + 1), right=True)


def dirac_bar_p_right(setting: HypercomplexSetting, g: AlgebraPoly) -> AlgebraPoly:
    return frame_sum(g, setting.v_conj, range(setting.p + 1), right=True)


def laplacian_p(setting: HypercomplexSetting, g: AlgebraPoly, k: int = 1) -> AlgebraPoly:
    """Delta_{x_p}^k over the slice-base variables."""
    for _ in range(k):
        total = g.zero_like()
        for s in range(setting.p + 1):
            total = total + g.derivative(s).derivative(s)
        g = total
    return g


# Spherical Dirac operator

def angular_momentum(f: AlgebraPoly, i: int, j: int) -> AlgebraPoly:
    """L_ij f = x_i d_j f - x_j d_i f."""
    return f.derivative(j).times_variable(i) - f.derivative(i).times_variable(j)


def gamma_spherical(f: AmbientPoly) -> AmbientPoly:
    """Gamma f = -sum_{p<i<j<=m} v_i (v_j (L_ij f))."""
    setting = f.setting
    total = f.zero_like()
    for i in range(setting.p + 1, setting.m + 1):
        for j in range(i + 1, setting.m + 1):
            rotated = angular_momentum(f, i, j)
            if rotated.is_zero():
                continue
            total = total - rotated.left_mul(setting.v[j]).left_mul(setting.v[i])
    return total  # type: ignore[return-value]


# Slice restriction and the slice Dirac operator

def slice_restrict(f: AmbientPoly, omega: SpherePoint) -> AlgebraPoly:
    """f(x_p + r omega) as a polynomial in (x_0, ..., x_p, r)."""
    setting = f.setting
    p = setting.p
    if omega.q != setting.q:
        raise VariableRangeError(f"Sphere point has q={omega.q}, setting has q={setting.q}")
    acc: dict[Monomial, AlgebraElement] = {}
    for mon, c in f.items():
        weight = 1
        for w, e in zip(omega.omega, mon[p + 1 :]):
            if e:
                weight *= w**e
        if not weight:
            continue
        key = mon[: p + 1] + (sum(mon[p + 1 :]),)
        term = c.scale(weight)
        acc[key] = acc[key] + term if key in acc else term
    return AlgebraPoly(setting.algebra, setting.stem_nvars, acc)


def slice_dirac(f: AmbientPoly, omega: SpherePoint) -> AlgebraPoly:
    """(D_{x_p} + omega d_r) applied to f(x_p + r omega); the result lives in (x_p, r)."""
    setting = f.setting
    g = slice_restrict(f, omega)
    return slice_dirac_slots(setting, g, setting.omega_element(omega))


def slice_dirac_slots(setting: HypercomplexSetting, g: AlgebraPoly, unit: AlgebraElement) -> AlgebraPoly:
    """D_{x_p} g + unit d_r g for g in the slots (x_0..x_p, r)."""
    return dirac_p(setting, g) + g.derivative(setting.p + 1).left_mul(unit)


def slice_dirac_right(f: AmbientPoly, omega: SpherePoint) -> AlgebraPoly:
    """Right slice operator: sum_l (d_l g) v_l + (d_r g) omega."""
    setting = f.setting
    g = slice_restrict(f, omega)
    return dirac_p_right(setting, g) + g.derivative(setting.p + 1).right_mul(setting.omega_element(omega))


def slice_dirac_power(f: AmbientPoly, omega: SpherePoint, k: int) -> AlgebraPoly:
    """D_omega^k applied to the slice restriction of f."""
    setting = f.setting
    unit = setting.omega_element(omega)
    g = slice_restrict(f, omega)
    for _ in range(k):
        g = slice_dirac_slots(setting, g, unit)
    return g
