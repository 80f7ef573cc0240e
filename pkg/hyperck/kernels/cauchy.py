"""
Cauchy kernels as Kelvin functions. Surface-area normalizations are omitted.

- poly_kernel(k):        E^[k] = conj(x) x_0^(k-1) / ((k-1)! |x|^(m+1)) on M
- slice_cauchy_kernel:   (x_p^c - r w) / |x'|^(p+2) in (x_0..x_p, r)
- slice_poly_kernel(k):  the slice analogue of E^[k]

The slice unit w is either v_{p+1} (a stand-in for every sphere point: it
squares to -1 and anticommutes with v_1..v_p) or the element of a given
rational sphere point.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from hyperck.algebra.element import AlgebraElement, conj
from hyperck.algebra.setting import HypercomplexSetting, SpherePoint
from hyperck.errors import VariableRangeError
from hyperck.kernels.kelvin import KelvinFunction
from hyperck.poly.ambient import AlgebraPoly


def _conjugate_paravector(units: tuple[AlgebraElement, ...]) -> AlgebraPoly:
    """sum_i x_i e_i^c in len(units) variables."""
    nvars = len(units)
    total = AlgebraPoly(units[0].algebra, nvars)
    for i, unit in enumerate(units):
        total = total + AlgebraPoly.variable(unit.algebra, nvars, i, conj(unit))
    return total


def _order_kernel(units: tuple[AlgebraElement, ...], k: int, s: int) -> KelvinFunction:
    if k < 1:
        raise VariableRangeError(f"Kernel order must be >= 1, got {k}")
    numerator = _conjugate_paravector(units).times_variable(0, k - 1)
    return KelvinFunction(units, numerator.scale(Fraction(1, factorial(k - 1))), s)


def poly_kernel(setting: HypercomplexSetting, k: int = 1) -> KelvinFunction:
    """E^[k] on M; k = 1 is the Cauchy kernel conj(x) / |x|^(m+1)."""
    return _order_kernel(tuple(setting.v), k, setting.m + 1)


def slice_unit(setting: HypercomplexSetting, omega: SpherePoint | None = None) -> AlgebraElement:
    """The slice unit: v_{p+1} by default, else the element of a sphere point."""
    if omega is None:
        return setting.v[setting.p + 1]
    return setting.omega_element(omega)


def slice_frame(setting: HypercomplexSetting, omega: SpherePoint | None = None) -> tuple[AlgebraElement, ...]:
    """(v_0, ..., v_p, w) for the variables (x_0, ..., x_p, r)."""
    return tuple(setting.base_units) + (slice_unit(setting, omega),)


def slice_cauchy_kernel(setting: HypercomplexSetting, omega: SpherePoint | None = None) -> KelvinFunction:
    """(x_p^c - r w) |x'|^-(p+2), annihilated by D_w from both sides."""
    return _order_kernel(slice_frame(setting, omega), 1, setting.p + 2)


def slice_poly_kernel(
    setting: HypercomplexSetting, k: int, omega: SpherePoint | None = None
) -> KelvinFunction:
    """Slice analogue of E^[k]; D_w^n lowers k by n."""
    return _order_kernel(slice_frame(setting, omega), k, setting.p + 2)
