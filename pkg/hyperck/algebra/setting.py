"""
Hypercomplex settings: an algebra, a hypercomplex basis 1, v_1..v_m of a
subspace M, and the (p, q) split of the variables.

Variables x_0..x_p form the slice base; x_{p+1}..x_m form the vector part
x_q = sum_{s>p} x_s v_s, written r * omega with omega a unit of the sphere S.

ASSUMPTIONS:
- v_s is the s-th imaginary generator of the algebra (Clifford e_s or octonion e_s).
- The basis completion beyond v_0..v_m is identified with the full blade basis.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from hyperck.algebra.descriptor import AlgebraDescriptor, AlgebraKind, make_algebra
from hyperck.algebra.element import (
    AlgebraElement,
    RationalLike,
    as_fraction,
    conj,
    mul,
    trace_norm,
)
from hyperck.errors import HyperckError, VariableRangeError
from hyperck.limits import RATIONAL_BOUND


@dataclass(frozen=True)
class BasisCondition:
    """One hypercomplex-basis condition and whether it holds."""
    name: str
    holds: bool


@dataclass(frozen=True)
class HypercomplexSetting:
    """
    Algebra plus hypercomplex basis plus (p, q) split.

    Attributes:
        algebra: the ambient alternative *-algebra
        m: dimension of M minus one (number of imaginary units used)
        p: last slice-base index; q = m - p vector variables remain
    """
    algebra: AlgebraDescriptor
    m: int
    p: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise HyperckError(f"Hypercomplex subspace needs m >= 1, got m={self.m}")
        if self.m > self.algebra.n:
            raise HyperckError(
                f"{self.algebra.name} has only {self.algebra.n} imaginary generators, m={self.m}"
            )
        if not 0 <= self.p < self.m:
            raise HyperckError(f"Split needs 0 <= p < m, got p={self.p}, m={self.m}")
        failed = [c.name for c in self.basis_conditions() if not c.holds]
        if failed:
            raise HyperckError(f"Not a hypercomplex basis: {', '.join(failed)}")

    @classmethod
    def build(cls, kind: AlgebraKind | str, m: int, p: int, n: int | None = None) -> HypercomplexSetting:
        """Build a setting; Clifford n defaults to m."""
        kind = AlgebraKind(kind)
        algebra = make_algebra(kind, n if n is not None else m)
        return cls(algebra=algebra, m=m, p=p)

    @property
    def q(self) -> int:
        return self.m - self.p

    @property
    def nvars(self) -> int:
        return self.m + 1

    @property
    def stem_nvars(self) -> int:
        """Slots of a stem polynomial: x_0..x_p then u."""
        return self.p + 2

    @property
    def u_slot(self) -> int:
        return self.p + 1

    @cached_property
    def v(self) -> tuple[AlgebraElement, ...]:
        """The hypercomplex basis v_0 = 1, v_1, ..., v_m."""
        units = [AlgebraElement.one(self.algebra)]
        for s in range(1, self.m + 1):
            units.append(AlgebraElement.basis(self.algebra, self.algebra.generator_index(s)))
        return tuple(units)

    @cached_property
    def v_conj(self) -> tuple[AlgebraElement, ...]:
        return tuple(conj(u) for u in self.v)

    @property
    def base_units(self) -> tuple[AlgebraElement, ...]:
        return self.v[: self.p + 1]

    @property
    def vector_units(self) -> tuple[AlgebraElement, ...]:
        return self.v[self.p + 1 :]

    @property
    def name(self) -> str:
        if self.algebra.kind is AlgebraKind.CLIFFORD:
            return f"clifford:n={self.algebra.n},m={self.m},p={self.p}"
        return f"octonion,m={self.m},p={self.p}"

    def basis_conditions(self) -> list[BasisCondition]:
        """t(v_s) = 0, n(v_s) = 1 and t(v_s v_t^c) = 0 for distinct s, t >= 1."""
        units = self.v[1:]
        checks = []
        for s, vs in enumerate(units, start=1):
            t, n = trace_norm(vs)
            checks.append(BasisCondition(f"t(v{s})=0", t.is_zero()))
            checks.append(BasisCondition(f"n(v{s})=1", n == AlgebraElement.one(self.algebra)))
        for s, vs in enumerate(units, start=1):
            for t_idx in range(s + 1, len(units) + 1):
                vt = units[t_idx - 1]
                prod = mul(vs, conj(vt))
                checks.append(BasisCondition(f"t(v{s} v{t_idx}^c)=0", (prod + conj(prod)).is_zero()))
        return checks

    def with_q(self, q: int) -> HypercomplexSetting:
        """Same algebra family and slice base, with q vector variables."""
        m = self.p + q
        if self.algebra.kind is AlgebraKind.CLIFFORD:
            return HypercomplexSetting.build(AlgebraKind.CLIFFORD, m, self.p, max(self.algebra.n, m))
        return HypercomplexSetting.build(AlgebraKind.OCTONION, m, self.p)

    def check_variable(self, s: int) -> None:
        if not 0 <= s <= self.m:
            raise VariableRangeError(f"Variable index {s} outside 0..{self.m}")

    def omega_element(self, point: SpherePoint) -> AlgebraElement:
        """omega = sum_s omega_s v_{p+s}."""
        if len(point.omega) != self.q:
            raise HyperckError(f"Sphere point has {len(point.omega)} entries, setting has q={self.q}")
        total = AlgebraElement.zero(self.algebra)
        for w, unit in zip(point.omega, self.vector_units):
            if w:
                total = total + unit.scale(w)
        return total

    def paravector(self, coords: Sequence[RationalLike]) -> AlgebraElement:
        """sum_s x_s v_s for a coordinate vector of length m+1."""
        if len(coords) != self.nvars:
            raise HyperckError(f"Point needs {self.nvars} coordinates, got {len(coords)}")
        total = AlgebraElement.zero(self.algebra)
        for x, unit in zip(coords, self.v):
            x = as_fraction(x)
            if x:
                total = total + unit.scale(x)
        return total

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SpherePoint:
    """Rational point on the unit sphere of R^q."""
    omega: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(as_fraction(w) for w in self.omega)
        object.__setattr__(self, "omega", values)
        if not values:
            raise HyperckError("Sphere point needs q >= 1 entries")
        if sum(w * w for w in values) != 1:
            raise HyperckError(f"Sphere point {values} is not a unit vector")

    @property
    def q(self) -> int:
        return len(self.omega)


def sphere_point_from_parameters(t: Sequence[RationalLike]) -> SpherePoint:
    """
    Inverse stereographic projection of a rational point t in Q^{q-1}.

    omega = (2 t_1, ..., 2 t_{q-1}, 1 - T) / (1 + T),  T = sum t_i^2.
    """
    params = [as_fraction(x) for x in t]
    total = sum((x * x for x in params), Fraction(0))
    denom = 1 + total
    return SpherePoint(tuple([2 * x / denom for x in params] + [(1 - total) / denom]))


def random_rational(rng: random.Random, bound: int = RATIONAL_BOUND) -> Fraction:
    """Uniform numerator in [-bound, bound], denominator in [1, bound]."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rational_sphere_point(setting: HypercomplexSetting, seed: int | str) -> SpherePoint:
    """Deterministic pseudo-random rational unit vector in Q^q."""
    rng = random.Random(seed)
    return sphere_point_from_parameters([random_rational(rng) for _ in range(setting.q - 1)])
