"""
Stem pairs of generalized partial-slice functions.

A slice function f(x_p + r omega) = F1(x_p, r) + omega F2(x_p, r) with F1 even
and F2 odd in r is stored through its u-encoding

    F1(x_p, r) = G1(x_p, r^2),    F2(x_p, r) = r G2(x_p, r^2),

so that on M it reads f = G1(x_p, rho) + x_q G2(x_p, rho) with rho = |x_q|^2.
G1 and G2 are polynomials in the slots (x_0, ..., x_p, u); slot p+1 is u.

ASSUMPTIONS:
- x_q c means sum_{s>p} x_s (v_s c) coefficientwise.
- The spherical derivative is the polynomial G2; it extends the quotient
  x_q^{-1}(f - f o diamond)/2 continuously across x_q = 0.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from hyperck.algebra.element import AlgebraElement, RationalLike, as_fraction, mul
from hyperck.algebra.setting import HypercomplexSetting, SpherePoint
from hyperck.errors import NotSliceFormError, SettingMismatchError, VariableRangeError
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly, Monomial, power_sum_expansion

logger = logging.getLogger(__name__)


def stem_names(setting: HypercomplexSetting) -> list[str]:
    return [f"x{i}" for i in range(setting.p + 1)] + ["u"]


def zero_slots(setting: HypercomplexSetting) -> AlgebraPoly:
    return AlgebraPoly(setting.algebra, setting.stem_nvars)


@dataclass(frozen=True)
class StemPair:
    """(G1, G2) in the slots (x_0..x_p, u) of a setting."""
    setting: HypercomplexSetting
    G1: AlgebraPoly
    G2: AlgebraPoly

    def __post_init__(self) -> None:
        for name, g in (("G1", self.G1), ("G2", self.G2)):
            if g.nvars != self.setting.stem_nvars:
                raise VariableRangeError(
                    f"{name} must have {self.setting.stem_nvars} slots (x_0..x_p, u), got {g.nvars}"
                )
            if g.algebra != self.setting.algebra:
                raise SettingMismatchError(f"{name} is over {g.algebra.name}")

    @classmethod
    def zero(cls, setting: HypercomplexSetting) -> StemPair:
        return cls(setting, zero_slots(setting), zero_slots(setting))

    @classmethod
    def constant(cls, setting: HypercomplexSetting, value: AlgebraElement | RationalLike) -> StemPair:
        return cls(setting, zero_slots(setting).constant_like(value), zero_slots(setting))

    def _check(self, other: StemPair) -> None:
        if self.setting != other.setting:
            raise SettingMismatchError(
                f"Stems in settings {self.setting.name} and {other.setting.name}"
            )

    def __add__(self, other: StemPair) -> StemPair:
        self._check(other)
        return StemPair(self.setting, self.G1 + other.G1, self.G2 + other.G2)

    def __sub__(self, other: StemPair) -> StemPair:
        self._check(other)
        return StemPair(self.setting, self.G1 - other.G1, self.G2 - other.G2)

    def __neg__(self) -> StemPair:
        return StemPair(self.setting, -self.G1, -self.G2)

    def scale(self, factor: RationalLike) -> StemPair:
        return StemPair(self.setting, self.G1.scale(factor), self.G2.scale(factor))

    def is_zero(self) -> bool:
        return self.G1.is_zero() and self.G2.is_zero()

    def values(
        self, base_point: Sequence[RationalLike], r: RationalLike
    ) -> tuple[AlgebraElement, AlgebraElement]:
        """(F1, F2) at (x_p, r): (G1(x_p, r^2), r G2(x_p, r^2))."""
        r = as_fraction(r)
        slots = [as_fraction(x) for x in base_point] + [r * r]
        return self.G1.evaluate(slots), self.G2.evaluate(slots).scale(r)

    def format(self) -> str:
        names = stem_names(self.setting)
        return f"G1 = {self.G1.format(names)}; G2 = {self.G2.format(names)}"

    def __str__(self) -> str:
        return self.format()


# Seeds (polynomials in x_0..x_p) and slot polynomials

def seed_to_slots(f0: AmbientPoly) -> AlgebraPoly:
    """Move a polynomial in x_0..x_p into stem slots (u exponent 0)."""
    setting = f0.setting
    p = setting.p
    terms: dict[Monomial, AlgebraElement] = {}
    for mon, c in f0.items():
        if any(mon[p + 1 :]):
            raise VariableRangeError(
                f"Seed polynomial mentions a variable beyond x_{p}: monomial {mon}"
            )
        terms[mon[: p + 1] + (0,)] = c
    return AlgebraPoly(setting.algebra, setting.stem_nvars, terms)


def slots_to_seed(setting: HypercomplexSetting, g: AlgebraPoly) -> AmbientPoly:
    """Inverse of seed_to_slots; g must not contain u."""
    if g.max_exponent(setting.u_slot):
        raise VariableRangeError("Slot polynomial still depends on u")
    pad = (0,) * setting.q
    return AmbientPoly(setting, {mon[: setting.p + 1] + pad: c for mon, c in g.items()})


def u_coefficient(setting: HypercomplexSetting, g: AlgebraPoly, k: int) -> AlgebraPoly:
    """Coefficient of u^k in g, as a slot polynomial without u."""
    slot = setting.u_slot
    terms = {mon[:slot] + (0,): c for mon, c in g.items() if mon[slot] == k}
    return AlgebraPoly(setting.algebra, setting.stem_nvars, terms)


def substitute_rho(setting: HypercomplexSetting, g: AlgebraPoly) -> AmbientPoly:
    """G(x_p, rho) with rho = sum_{s>p} x_s^2, as an ambient polynomial."""
    p, q = setting.p, setting.q
    acc: dict[Monomial, AlgebraElement] = {}
    for mon, c in g.items():
        base, power = mon[: p + 1], mon[p + 1]
        for rho_mon, weight in power_sum_expansion(q, power):
            key = base + rho_mon
            term = c.scale(weight)
            acc[key] = acc[key] + term if key in acc else term
    return AmbientPoly(setting, acc)


def vector_times(setting: HypercomplexSetting, g: AmbientPoly) -> AmbientPoly:
    """x_q g = sum_{s>p} x_s (v_s g)."""
    total = AmbientPoly(setting)
    for s in range(setting.p + 1, setting.m + 1):
        total = total + g.left_mul(setting.v[s]).times_variable(s)
    return total  # type: ignore[return-value]


def times_vector(setting: HypercomplexSetting, g: AmbientPoly) -> AmbientPoly:
    """g x_q = sum_{s>p} x_s (g v_s)."""
    total = AmbientPoly(setting)
    for s in range(setting.p + 1, setting.m + 1):
        total = total + g.right_mul(setting.v[s]).times_variable(s)
    return total  # type: ignore[return-value]


def rho_poly(setting: HypercomplexSetting) -> AmbientPoly:
    one = zero_slots(setting).constant_like(1)
    return substitute_rho(setting, one.times_variable(setting.u_slot))


def vector_power_times(setting: HypercomplexSetting, k: int, g: AmbientPoly) -> AmbientPoly:
    """x_q^k g, using x_q^2 = -rho."""
    result = g
    if k % 2:
        result = vector_times(setting, g)
    if k >= 2:
        neg_rho = -rho_poly(setting)
        for _ in range(k // 2):
            result = result.mul(neg_rho)  # type: ignore[assignment]
    return result


# Stem <-> ambient

def materialize(S: StemPair) -> AmbientPoly:
    """f = G1(x_p, rho) + x_q G2(x_p, rho)."""
    setting = S.setting
    even = substitute_rho(setting, S.G1)
    odd = vector_times(setting, substitute_rho(setting, S.G2))
    return even + odd  # type: ignore[return-value]


def materialize_right(S: StemPair) -> AmbientPoly:
    """Right slice function f = G1(x_p, rho) + G2(x_p, rho) x_q."""
    setting = S.setting
    return substitute_rho(setting, S.G1) + times_vector(setting, substitute_rho(setting, S.G2))  # type: ignore[return-value]


def partial_even_odd(f: AmbientPoly) -> tuple[AmbientPoly, AmbientPoly]:
    """(PE[f], PO[f]) = ((f + f o diamond)/2, (f - f o diamond)/2)."""
    reflected = f.reflect()
    half = Fraction(1, 2)
    return (f + reflected).scale(half), (f - reflected).scale(half)  # type: ignore[return-value]


def _group_by_base(
    setting: HypercomplexSetting, f: AmbientPoly
) -> dict[Monomial, dict[Monomial, AlgebraElement]]:
    p = setting.p
    groups: dict[Monomial, dict[Monomial, AlgebraElement]] = {}
    for mon, c in f.items():
        groups.setdefault(mon[: p + 1], {})[mon[p + 1 :]] = c
    return groups


def _subtract(h: dict[Monomial, AlgebraElement], key: Monomial, value: AlgebraElement) -> None:
    h[key] = h[key] - value if key in h else -value


def _first_nonzero(h: dict[Monomial, AlgebraElement]) -> Monomial | None:
    for key in sorted(h):
        if not h[key].is_zero():
            return key
    return None


def extract(f: AmbientPoly) -> StemPair:
    """
    Recover (G1, G2) from a polynomial of generalized partial-slice form.

    For every base monomial x_p^alpha, the even part must be a polynomial in rho
    and the odd part must be x_q times a polynomial in rho. The coefficient of
    rho^j is read off from the pure x_{p+1} monomial and then subtracted; any
    remainder means f is not a slice function.

    Raises:
        NotSliceFormError: with the first offending monomial
    """
    setting = f.setting
    p, q = setting.p, setting.q
    first_unit = setting.v[p + 1]
    even, odd = partial_even_odd(f)

    g1: dict[Monomial, AlgebraElement] = {}
    for alpha, h in _group_by_base(setting, even).items():
        for degree in sorted({sum(beta) for beta in h}, reverse=True):
            j = degree // 2
            lead = h.get((2 * j,) + (0,) * (q - 1))
            if lead is None or lead.is_zero():
                continue
            for rho_mon, weight in power_sum_expansion(q, j):
                _subtract(h, rho_mon, lead.scale(weight))
            g1[alpha + (j,)] = lead
        bad = _first_nonzero(h)
        if bad is not None:
            raise NotSliceFormError(
                f"Even part is not a polynomial in rho at monomial {alpha + bad}", alpha + bad
            )

    g2: dict[Monomial, AlgebraElement] = {}
    for alpha, h in _group_by_base(setting, odd).items():
        for degree in sorted({sum(beta) for beta in h}, reverse=True):
            j = (degree - 1) // 2
            lead = h.get((2 * j + 1,) + (0,) * (q - 1))
            if lead is None or lead.is_zero():
                continue
            coeff = -mul(first_unit, lead)
            for s in range(q):
                image = mul(setting.v[p + 1 + s], coeff)
                for rho_mon, weight in power_sum_expansion(q, j):
                    shifted = rho_mon[:s] + (rho_mon[s] + 1,) + rho_mon[s + 1 :]
                    _subtract(h, shifted, image.scale(weight))
            g2[alpha + (j,)] = coeff
        bad = _first_nonzero(h)
        if bad is not None:
            raise NotSliceFormError(
                f"Odd part is not x_q times a polynomial in rho at monomial {alpha + bad}",
                alpha + bad,
            )

    nslots = setting.stem_nvars
    return StemPair(
        setting,
        AlgebraPoly(setting.algebra, nslots, g1),
        AlgebraPoly(setting.algebra, nslots, g2),
    )


def is_slice_form(f: AmbientPoly) -> bool:
    try:
        extract(f)
    except NotSliceFormError:
        return False
    return True


@dataclass(frozen=True)
class SphericalParts:
    """Spherical value f_s^o and spherical derivative f_s', both as even stems."""
    value: StemPair
    derivative: StemPair


def spherical_parts(S: StemPair) -> SphericalParts:
    """f = f_s^o + x_q f_s' with f_s^o = G1 and f_s' = G2, read as functions of (x_p, rho)."""
    zero = zero_slots(S.setting)
    return SphericalParts(
        value=StemPair(S.setting, S.G1, zero),
        derivative=StemPair(S.setting, S.G2, zero),
    )


def stem_coefficients(S: StemPair) -> list[AmbientPoly]:
    """
    Signed u-coefficients A_0, A_1, A_2, ... of a stem.

    G1 = sum_k (-1)^k u^k A_{2k} and G2 = sum_k (-1)^k u^k A_{2k+1}; the list
    runs up to the highest nonzero entry.
    """
    setting = S.setting
    slot = setting.u_slot
    top = max(S.G1.max_exponent(slot), S.G2.max_exponent(slot))
    out: list[AmbientPoly] = []
    for k in range(top + 1):
        sign = -1 if k % 2 else 1
        out.append(slots_to_seed(setting, u_coefficient(setting, S.G1, k)).scale(sign))  # type: ignore[arg-type]
        out.append(slots_to_seed(setting, u_coefficient(setting, S.G2, k)).scale(sign))  # type: ignore[arg-type]
    while out and out[-1].is_zero():
        out.pop()
    return out


# Representation formula

@dataclass(frozen=True)
class RepresentationResult:
    """Both sides of the representation formula at one configuration."""
    lhs: AlgebraElement
    rhs: AlgebraElement
    f1_eta: AlgebraElement
    f2_eta: AlgebraElement
    f1_omega: AlgebraElement
    f2_omega: AlgebraElement

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.f1_eta == self.f1_omega and self.f2_eta == self.f2_omega


def representation_identity(
    f: AmbientPoly,
    base_point: Sequence[RationalLike],
    r: RationalLike,
    omega: SpherePoint,
    eta: SpherePoint,
) -> RepresentationResult:
    """
    Evaluate f(x_p + r omega) against
    (f(x_p + r eta) + f(x_p - r eta))/2 + omega (eta (f(x_p - r eta) - f(x_p + r eta)))/2.

    Works on any ambient polynomial, so non-slice inputs can be shown to fail.
    """
    setting = f.setting
    if len(base_point) != setting.p + 1:
        raise VariableRangeError(f"Base point needs {setting.p + 1} coordinates")
    r = as_fraction(r)
    base = [as_fraction(x) for x in base_point]
    w = setting.omega_element(omega)
    e = setting.omega_element(eta)
    half = Fraction(1, 2)

    def at(sign: int, point: SpherePoint) -> AlgebraElement:
        return f.evaluate(base + [sign * r * c for c in point.omega])

    lhs = at(1, omega)
    lhs_reflected = at(-1, omega)
    plus, minus = at(1, eta), at(-1, eta)
    f1_eta = (plus + minus).scale(half)
    f2_eta = mul(e, minus - plus).scale(half)
    rhs = f1_eta + mul(w, f2_eta)
    f1_omega = (lhs + lhs_reflected).scale(half)
    f2_omega = mul(w, lhs_reflected - lhs).scale(half)
    return RepresentationResult(lhs, rhs, f1_eta, f2_eta, f1_omega, f2_omega)


def representation_check(
    S: StemPair,
    base_point: Sequence[RationalLike],
    r: RationalLike,
    omega: SpherePoint,
    eta: SpherePoint,
) -> bool:
    """Representation formula on materialize(S), plus agreement with the stem values."""
    result = representation_identity(materialize(S), base_point, r, omega, eta)
    f1, f2 = S.values(base_point, r)
    holds = result.holds and result.f1_eta == f1 and result.f2_eta == f2
    if not holds:
        logger.debug("Representation formula failed for %s at r=%s", S, r)
    return holds
