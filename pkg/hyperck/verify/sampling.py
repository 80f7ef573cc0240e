"""
Seeded generators of random exact inputs for the law suites.

Rationals have |numerator| <= 16 and 1 <= denominator <= 16. Each law gets
its own generator seeded from (seed, suite, law, setting), so adding or
reordering laws never changes another law's draws.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hyperck.algebra.descriptor import AlgebraDescriptor
from hyperck.algebra.element import AlgebraElement
from hyperck.algebra.setting import (
    HypercomplexSetting,
    SpherePoint,
    random_rational,
    sphere_point_from_parameters,
)
from hyperck.extensions.ck import ck_extend
from hyperck.limits import RATIONAL_BOUND
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly, Monomial
from hyperck.stem.pair import StemPair


class RationalSampler:
    """Random rationals, elements, polynomials and stems from one seeded stream."""

    def __init__(self, seed: int | str, bound: int = RATIONAL_BOUND):
        self.rng = random.Random(seed)
        self.bound = bound

    @classmethod
    def for_law(cls, seed: int, suite: str, law: str, setting: str = "") -> RationalSampler:
        return cls(f"{seed}:{suite}:{law}:{setting}")

    # Scalars and elements

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            value = random_rational(self.rng, self.bound)
            if value or not nonzero:
                return value

    def element(self, algebra: AlgebraDescriptor, support: int = 3) -> AlgebraElement:
        """Element with a random scalar part and up to `support` random basis entries."""
        items = [(0, self.rational())]
        for _ in range(support):
            items.append((self.rng.randrange(algebra.dim), self.rational()))
        return AlgebraElement.from_sparse(algebra, items)

    def dense_element(self, algebra: AlgebraDescriptor) -> AlgebraElement:
        return AlgebraElement(algebra, tuple(self.rational() for _ in range(algebra.dim)))

    def paravector_element(self, setting: HypercomplexSetting, nonzero: bool = True) -> AlgebraElement:
        """sum_s c_s v_s with random rational c_s; nonzero when asked."""
        while True:
            elem = setting.paravector([self.rational() for _ in range(setting.nvars)])
            if not nonzero or not elem.is_zero():
                return elem

    # Polynomials

    def _monomial(self, nvars: int, degree: int) -> Monomial:
        exps = [0] * nvars
        for _ in range(self.rng.randint(0, degree)):
            exps[self.rng.randrange(nvars)] += 1
        return tuple(exps)

    def algebra_poly(
        self, algebra: AlgebraDescriptor, nvars: int, degree: int, terms: int = 3, active: int | None = None
    ) -> AlgebraPoly:
        """Random polynomial; only the first `active` variables occur."""
        active = nvars if active is None else active
        out = {}
        for _ in range(terms):
            mon = self._monomial(active, degree) + (0,) * (nvars - active)
            out[mon] = self.element(algebra, support=2)
        return AlgebraPoly(algebra, nvars, out)

    def seed_poly(self, setting: HypercomplexSetting, degree: int, terms: int = 3) -> AmbientPoly:
        """Random polynomial in x_0..x_p only."""
        poly = self.algebra_poly(setting.algebra, setting.nvars, degree, terms, active=setting.p + 1)
        return AmbientPoly.from_algebra_poly(setting, poly)

    def real_seed_poly(self, setting: HypercomplexSetting, degree: int, terms: int = 3) -> AmbientPoly:
        seed = self.seed_poly(setting, degree, terms)
        return seed.map_coefficients(lambda c: AlgebraElement.scalar(setting.algebra, c.real_part))  # type: ignore[return-value]

    def ambient_poly(self, setting: HypercomplexSetting, degree: int, terms: int = 3) -> AmbientPoly:
        poly = self.algebra_poly(setting.algebra, setting.nvars, degree, terms)
        return AmbientPoly.from_algebra_poly(setting, poly)

    def real_ambient_poly(self, setting: HypercomplexSetting, degree: int, terms: int = 3) -> AmbientPoly:
        f = self.ambient_poly(setting, degree, terms)
        return f.map_coefficients(lambda c: AlgebraElement.scalar(setting.algebra, c.real_part))  # type: ignore[return-value]

    # Stems

    def slot_poly(self, setting: HypercomplexSetting, degree: int, terms: int = 3) -> AlgebraPoly:
        """Random polynomial in (x_0..x_p, u); u counts twice towards the degree."""
        out = {}
        for _ in range(terms):
            u_power = self.rng.randint(0, degree // 2)
            base = self._monomial(setting.p + 1, degree - 2 * u_power)
            out[base + (u_power,)] = self.element(setting.algebra, support=2)
        return AlgebraPoly(setting.algebra, setting.stem_nvars, out)

    def stem(self, setting: HypercomplexSetting, degree: int) -> StemPair:
        """Arbitrary (generally not regular) stem."""
        return StemPair(setting, self.slot_poly(setting, degree), self.slot_poly(setting, max(degree - 1, 0)))

    def regular_stem(self, setting: HypercomplexSetting, degree: int) -> StemPair:
        """GPS-regular stem: the CK extension of a random seed."""
        return ck_extend(self.seed_poly(setting, degree))

    # Points

    def base_point(self, setting: HypercomplexSetting) -> list[Fraction]:
        return [self.rational() for _ in range(setting.p + 1)]

    def ambient_point(self, setting: HypercomplexSetting) -> list[Fraction]:
        return [self.rational() for _ in range(setting.nvars)]

    def radius(self) -> Fraction:
        return abs(self.rational(nonzero=True))

    def sphere_point(self, setting: HypercomplexSetting) -> SpherePoint:
        return sphere_point_from_parameters([self.rational() for _ in range(setting.q - 1)])

    def multi_index(self, p: int, degree: int) -> tuple[int, ...]:
        k = [0] * (p + 1)
        for _ in range(degree):
            k[self.rng.randrange(p + 1)] += 1
        return tuple(k)
