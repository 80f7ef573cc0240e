"""
Randomized laws grouped by suite.

A law draws its inputs from a RationalSampler and returns None when the
identity holds, or a map of named, pretty-printed inputs and sides when it
fails. Degree bounds are capped per law where the cost grows quickly.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from hyperck.algebra.element import AlgebraElement, associator, cone_membership, conj, inverse, mul
from hyperck.algebra.setting import HypercomplexSetting
from hyperck.extensions.ck import ck_extend, ck_extend_right, restrict_to_base
from hyperck.extensions.fueter import (
    fueter_polynomial,
    fueter_variable,
    fueter_variable_right,
    seed_monomial,
    v_polynomial,
)
from hyperck.extensions.gck import (
    gck_extend,
    gck_stem,
    hgck_extend,
    initial_data,
)
from hyperck.fueter_sce.constants import c_q, double_factorial
from hyperck.fueter_sce.diagrams import (
    dirac_of_laplacian_power,
    fueter_sce_map,
    laplacian_power_ambient,
    laplacian_power_stem,
    verify_diagram_H,
    verify_diagram_M,
    verify_diagram_MH,
)
from hyperck.kernels.cauchy import poly_kernel, slice_cauchy_kernel, slice_poly_kernel
from hyperck.kernels.kelvin import (
    kelvin_dirac,
    kelvin_dirac_power,
    kelvin_dirac_right,
    kelvin_laplacian,
    radial_power,
)
from hyperck.models.config import Suite
from hyperck.models.reports import DiagramReport
from hyperck.operators.dirac import (
    dirac,
    dirac_bar,
    dirac_bar_p,
    dirac_bar_right,
    dirac_p,
    dirac_power,
    dirac_power_symmetrized,
    dirac_right,
    dirac_split,
    frame_sum,
    gamma_spherical,
    laplacian,
    laplacian_power,
    slice_dirac,
    slice_dirac_right,
)
from hyperck.operators.stem_ops import (
    cr_check,
    inter_relation_residual,
    slice_laplacian_stem,
    stem_dirac,
    stem_dirac_bar,
    stem_laplacian,
    vekua_check,
)
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly
from hyperck.poly.assoc import AssocTree, all_trees, assoc_product
from hyperck.stem.pair import (
    StemPair,
    extract,
    is_slice_form,
    materialize,
    materialize_right,
    partial_even_odd,
    representation_check,
    seed_to_slots,
    slots_to_seed,
    stem_coefficients,
    u_coefficient,
    vector_power_times,
)
from hyperck.verify.sampling import RationalSampler

Failure = Optional[dict[str, str]]
LawFn = Callable[[RationalSampler, HypercomplexSetting, int], Failure]


@dataclass(frozen=True)
class Law:
    """A named randomized identity."""
    suite: Suite
    name: str
    check: LawFn
    deterministic: bool = False


def _fail(**named: object) -> dict[str, str]:
    return {key: str(value) for key, value in named.items()}


def _compare(lhs: object, rhs: object, **context: object) -> Failure:
    if lhs == rhs:
        return None
    return _fail(lhs=lhs, rhs=rhs, **context)


def _first(failures: list[Failure]) -> Failure:
    return next((f for f in failures if f is not None), None)


# Algebra

def _alternative(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    alg = setting.algebra
    a, b, c = smp.dense_element(alg), smp.dense_element(alg), smp.dense_element(alg)
    zero = AlgebraElement.zero(alg)
    return _first([
        _compare(associator(a, a, b), zero, a=a, b=b, identity="[a,a,b]=0"),
        _compare(associator(a, b, b), zero, a=a, b=b, identity="[a,b,b]=0"),
        _compare(associator(a, b, a), zero, a=a, b=b, identity="[a,b,a]=0"),
        _compare(associator(a, b, c), -associator(b, a, c), a=a, b=b, c=c, identity="[a,b,c]=-[b,a,c]"),
        _compare(associator(a, b, c), associator(b, c, a), a=a, b=b, c=c, identity="[a,b,c]=[b,c,a]"),
    ])


def _artin(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    alg = setting.algebra
    a, b = smp.dense_element(alg), smp.dense_element(alg)
    ab = mul(a, b)
    zero = AlgebraElement.zero(alg)
    return _first([
        _compare(associator(a, b, ab), zero, a=a, b=b, identity="[a,b,ab]=0"),
        _compare(associator(ab, a, b), zero, a=a, b=b, identity="[ab,a,b]=0"),
        _compare(associator(mul(a, a), b, a), zero, a=a, b=b, identity="[a^2,b,a]=0"),
    ])


def _real_associates(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    alg = setting.algebra
    r = AlgebraElement.scalar(alg, smp.rational())
    a, b = smp.dense_element(alg), smp.dense_element(alg)
    zero = AlgebraElement.zero(alg)
    return _first([
        _compare(associator(r, a, b), zero, r=r, a=a, b=b),
        _compare(associator(a, r, b), zero, r=r, a=a, b=b),
    ])


def _moufang(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    alg = setting.algebra
    a, b, c = smp.dense_element(alg), smp.dense_element(alg), smp.dense_element(alg)
    aba = mul(mul(a, b), a)
    return _first([
        _compare(mul(a, mul(b, mul(a, c))), mul(aba, c), a=a, b=b, c=c, identity="a(b(ac))=(aba)c"),
        _compare(mul(mul(mul(c, a), b), a), mul(c, aba), a=a, b=b, c=c, identity="((ca)b)a=c(aba)"),
        _compare(mul(mul(a, b), mul(c, a)), mul(mul(a, mul(b, c)), a), a=a, b=b, c=c,
                 identity="(ab)(ca)=(a(bc))a"),
    ])


def _anti_involution(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    alg = setting.algebra
    a, b = smp.dense_element(alg), smp.dense_element(alg)
    return _first([
        _compare(conj(mul(a, b)), mul(conj(b), conj(a)), a=a, b=b, identity="(ab)^c=b^c a^c"),
        _compare(conj(conj(a)), a, a=a, identity="(a^c)^c=a"),
    ])


def _inverse(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    a = smp.paravector_element(setting)
    b = smp.dense_element(setting.algebra)
    inv = inverse(a)
    return _first([
        _compare(mul(inv, mul(a, b)), b, a=a, b=b, identity="a^-1(ab)=b"),
        _compare(mul(mul(b, a), inv), b, a=a, b=b, identity="(ba)a^-1=b"),
    ])


def _cone(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    a = smp.paravector_element(setting)
    if not cone_membership(a).in_QA:
        return _fail(a=a, identity="paravector in the quadratic cone")
    failed = [c.name for c in setting.basis_conditions() if not c.holds]
    if failed:
        return _fail(failed=", ".join(failed))
    return None


# Polynomials

def _leibniz(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f, g = smp.ambient_poly(setting, degree), smp.ambient_poly(setting, degree)
    i = smp.rng.randrange(setting.nvars)
    lhs = f.mul(g).derivative(i)
    rhs = f.derivative(i).mul(g) + f.mul(g.derivative(i))
    return _compare(lhs, rhs, f=f, g=g, i=i)


def _derivatives_commute(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f = smp.ambient_poly(setting, degree)
    i, j = smp.rng.randrange(setting.nvars), smp.rng.randrange(setting.nvars)
    return _compare(f.derivative(i).derivative(j), f.derivative(j).derivative(i), f=f, i=i, j=j)


def _evaluation_multiplicative(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f, g = smp.ambient_poly(setting, degree), smp.ambient_poly(setting, degree)
    point = smp.ambient_point(setting)
    return _compare(f.mul(g).evaluate(point), mul(f.evaluate(point), g.evaluate(point)), f=f, g=g)


def _real_factor_associates(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f = smp.real_ambient_poly(setting, min(degree, 2))
    g, h = smp.ambient_poly(setting, min(degree, 2)), smp.ambient_poly(setting, min(degree, 2))
    for factors in ([f, g, h], [g, f, h], [g, h, f]):
        left, right = (assoc_product(factors, tree) for tree in all_trees(3))
        if left != right:
            return _fail(f=f, g=g, h=h, position=factors.index(f), lhs=left, rhs=right)
    return None


def _distributive(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f, g, h = (smp.ambient_poly(setting, degree) for _ in range(3))
    return _first([
        _compare(f.mul(g + h), f.mul(g) + f.mul(h), f=f, g=g, h=h),
        _compare((g + h).mul(f), g.mul(f) + h.mul(f), f=f, g=g, h=h),
    ])


def _reflect_involution(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f = smp.ambient_poly(setting, degree)
    return _compare(f.reflect().reflect(), f, f=f)


# Operators

def _laplacian_routes(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f = smp.ambient_poly(setting, degree)
    lap = laplacian(f)
    return _first([
        _compare(dirac_bar(dirac(f)), lap, f=f, route="D-bar D"),
        _compare(dirac(dirac_bar(f)), lap, f=f, route="D D-bar"),
        _compare(dirac_bar_right(dirac_right(f)), lap, f=f, route="(f D) D-bar"),
        _compare(dirac_right(dirac_bar_right(f)), lap, f=f, route="(f D-bar) D"),
    ])


def _split_sums(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f = smp.ambient_poly(setting, degree)
    base, vector = dirac_split(f)
    return _compare(base + vector, dirac(f), f=f)


def _splitting_lemma(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    g = smp.seed_poly(setting, min(degree, 3))
    q = setting.q
    vector = range(setting.p + 1, setting.m + 1)

    def d_q(f: AmbientPoly) -> AlgebraPoly:
        return frame_sum(f, setting.v, vector)

    def d_bar_q(f: AmbientPoly) -> AlgebraPoly:
        return frame_sum(f, setting.v_conj, vector)

    checks: list[Failure] = []
    for k in range(4):
        even, odd = vector_power_times(setting, 2 * k, g), vector_power_times(setting, 2 * k + 1, g)
        lower = vector_power_times(setting, 2 * k - 1, g) if k else g.zero_like()
        checks += [
            _compare(dirac_p(setting, even), vector_power_times(setting, 2 * k, dirac_p(setting, g)), g=g, k=k,
                     formula="D_p(x^2k g)"),
            _compare(dirac_p(setting, odd), vector_power_times(setting, 2 * k + 1, dirac_bar_p(setting, g)),
                     g=g, k=k, formula="D_p(x^(2k+1) g)"),
            _compare(d_q(even), lower.scale(-2 * k), g=g, k=k, formula="D_q(x^2k g)"),
            _compare(d_q(odd), even.scale(-(2 * k + q)), g=g, k=k, formula="D_q(x^(2k+1) g)"),
            _compare(dirac_bar_p(setting, even), vector_power_times(setting, 2 * k, dirac_bar_p(setting, g)),
                     g=g, k=k, formula="D-bar_p(x^2k g)"),
            _compare(dirac_bar_p(setting, odd), vector_power_times(setting, 2 * k + 1, dirac_p(setting, g)),
                     g=g, k=k, formula="D-bar_p(x^(2k+1) g)"),
            _compare(d_bar_q(even), lower.scale(2 * k), g=g, k=k, formula="D-bar_q(x^2k g)"),
            _compare(d_bar_q(odd), even.scale(2 * k + q), g=g, k=k, formula="D-bar_q(x^(2k+1) g)"),
        ]
    return _first(checks)


def _gamma_identity(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.stem(setting, degree)
    f = materialize(S)
    _, odd = partial_even_odd(f)
    return _compare(gamma_spherical(f), odd.scale(setting.q - 1), stem=S)


def _slice_dirac_difference(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.stem(setting, degree)
    f = materialize(S)
    omega = smp.sphere_point(setting)
    base, r = smp.base_point(setting), smp.radius()
    point = base + [r * w for w in omega.omega]
    lhs = dirac(f).evaluate(point) - slice_dirac(f, omega).evaluate(base + [r])
    rhs = S.G2.evaluate(base + [r * r]).scale(1 - setting.q)
    return _compare(lhs, rhs, stem=S, omega=omega.omega, r=r)


def _stem_operator_routes(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.stem(setting, degree)
    f = materialize(S)
    return _first([
        _compare(stem_dirac(S), extract(dirac(f)), stem=S, operator="D"),
        _compare(stem_dirac_bar(S), extract(dirac_bar(f)), stem=S, operator="D-bar"),
        _compare(stem_laplacian(S), extract(laplacian(f)), stem=S, operator="Laplacian"),  # type: ignore[arg-type]
    ])


def _slice_harmonic(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    return _compare(slice_laplacian_stem(S), StemPair.zero(setting), stem=S)


def _symmetrized_powers(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f = smp.ambient_poly(setting, min(degree, 3), terms=2)
    checks: list[Failure] = []
    for k in range(1, 4):
        iterated = dirac_power(f, k)
        for tree in (AssocTree.right_comb(k + 1), AssocTree.left_comb(k + 1)):
            checks.append(_compare(dirac_power_symmetrized(f, k, tree), iterated, f=f, k=k, tree=tree))
    return _first(checks)


def _inter_relation(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    return _first([
        _compare(inter_relation_residual(S, k), S.G1.zero_like(), stem=S, k=k) for k in range(4)
    ])


# CK

def _ck_regular(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f0 = smp.seed_poly(setting, degree)
    S = ck_extend(f0)
    return None if cr_check(S) else _fail(f0=f0, stem=S)


def _ck_trace(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f0 = smp.seed_poly(setting, degree)
    S = ck_extend(f0)
    return _first([
        _compare(restrict_to_base(materialize(S)), f0, f0=f0),
        _compare(slots_to_seed(setting, u_coefficient(setting, S.G1, 0)), f0, f0=f0),
    ])


def _ck_slice_dirac(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f0 = smp.seed_poly(setting, degree)
    f = materialize(ck_extend(f0))
    omega = smp.sphere_point(setting)
    residual = slice_dirac(f, omega)
    return None if residual.is_zero() else _fail(f0=f0, omega=omega.omega, residual=residual)


def _ck_uniqueness(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    trace = slots_to_seed(setting, u_coefficient(setting, S.G1, 0))
    return _compare(ck_extend(trace), S, stem=S)


def _ck_extract(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.stem(setting, degree)
    return _compare(extract(materialize(S)), S, stem=S)


def _ck_right(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f0 = smp.seed_poly(setting, min(degree, 3))
    f = materialize_right(ck_extend_right(f0))
    omega = smp.sphere_point(setting)
    residual = slice_dirac_right(f, omega)
    return None if residual.is_zero() else _fail(f0=f0, omega=omega.omega, residual=residual)


# GCK

def _gck_monogenic(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0 = smp.seed_poly(setting, degree)
    f = gck_extend(A0)
    residual = dirac(f)
    return None if residual.is_zero() else _fail(A0=A0, residual=residual)


def _gck_vekua(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0 = smp.seed_poly(setting, degree)
    return None if vekua_check(gck_stem(A0)) else _fail(A0=A0)


def _gck_recurrence(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0 = smp.seed_poly(setting, degree)
    coeffs = stem_coefficients(extract(gck_extend(A0)))
    q = setting.q
    zero = A0.zero_like()
    checks: list[Failure] = []
    for k in range(0, len(coeffs), 2):
        a_even = coeffs[k]
        a_odd = coeffs[k + 1] if k + 1 < len(coeffs) else zero
        a_next = coeffs[k + 2] if k + 2 < len(coeffs) else zero
        j = k // 2
        checks.append(_compare(a_odd.scale(2 * j + q), dirac_p(setting, a_even), A0=A0, k=j, recurrence="odd"))
        checks.append(_compare(a_next.scale(2 * j + 2), dirac_bar_p(setting, a_odd), A0=A0, k=j, recurrence="even"))
    return _first(checks)


def _gck_trace(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0 = smp.seed_poly(setting, degree)
    return _compare(restrict_to_base(gck_extend(A0)), A0, A0=A0)


def _gck_q1_is_ck(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    if setting.q != 1:
        return None
    A0 = smp.seed_poly(setting, degree)
    return _compare(gck_extend(A0), materialize(ck_extend(A0)), A0=A0)


# HGCK

def _hgck_harmonic(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0, A1 = smp.seed_poly(setting, degree), smp.seed_poly(setting, degree)
    f = hgck_extend(A0, A1)
    residual = laplacian(f)
    return None if residual.is_zero() else _fail(A0=A0, A1=A1, residual=residual)


def _hgck_initial(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0, A1 = smp.seed_poly(setting, degree), smp.seed_poly(setting, degree)
    value, slope = initial_data(hgck_extend(A0, A1))
    return _first([
        _compare(value, A0, A0=A0, A1=A1, condition="value"),
        _compare(slope, A1.scale(-setting.q), A0=A0, A1=A1, condition="slope"),
    ])


def _hgck_split(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0, A1 = smp.seed_poly(setting, degree), smp.seed_poly(setting, degree)
    zero = A0.zero_like()
    f = hgck_extend(A0, A1)
    even, odd = partial_even_odd(f)
    return _first([
        _compare(f, hgck_extend(A0, zero) + hgck_extend(zero, A1), A0=A0, A1=A1),
        _compare(even, hgck_extend(A0, zero), A0=A0, A1=A1, part="PE"),
        _compare(odd, hgck_extend(zero, A1), A0=A0, A1=A1, part="PO"),
        None if is_slice_form(f) else _fail(A0=A0, A1=A1, reason="not slice form"),
    ])


def _hgck_corollary(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0 = smp.seed_poly(setting, degree)
    zero = A0.zero_like()
    q = setting.q
    rhs = hgck_extend(A0, zero) + hgck_extend(zero, dirac_p(setting, A0)).scale(Fraction(1, q))  # type: ignore[arg-type]
    return _compare(gck_extend(A0), rhs, A0=A0)


def _hgck_dirac_bar(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f0 = smp.seed_poly(setting, degree)
    zero = f0.zero_like()
    return _first([
        _compare(dirac_bar(hgck_extend(f0, zero)), gck_extend(dirac_bar_p(setting, f0)), f0=f0,  # type: ignore[arg-type]
                 identity="D-bar HGCK[f0,0] = GCK[D-bar_p f0]"),
        _compare(dirac_bar(hgck_extend(zero, f0)), gck_extend(f0).scale(setting.q), f0=f0,
                 identity="D-bar HGCK[0,f0] = q GCK[f0]"),
    ])


def _hgck_from_gck(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    A0, f0 = smp.seed_poly(setting, degree), smp.seed_poly(setting, degree)
    even, _ = partial_even_odd(gck_extend(A0))
    _, odd = partial_even_odd(gck_extend(f0))
    lhs = hgck_extend(A0, dirac_p(setting, f0))  # type: ignore[arg-type]
    return _compare(lhs, even + odd.scale(setting.q), A0=A0, f0=f0)


# Fueter polynomials

def _fueter_v_equals_p(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    k = smp.multi_index(setting.p, smp.rng.randint(0, min(degree, 4)))
    return _compare(v_polynomial(setting, k), fueter_polynomial(setting, k), k=k)


def _fueter_comb_independent(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    total = smp.rng.randint(1, min(degree, 4)) if degree else 0
    k = smp.multi_index(setting.p, total)
    left = fueter_polynomial(setting, k)
    right = fueter_polynomial(setting, k, tree=AssocTree.right_comb(total) if total else None)
    return _compare(left, right, k=k)


def _fueter_variable_is_ck(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    ell = smp.rng.randrange(setting.p + 1)
    unit = [0] * (setting.p + 1)
    unit[ell] = 1
    extended = materialize(ck_extend(seed_monomial(setting, unit)))
    return _compare(fueter_variable(setting, ell), extended, ell=ell)


def _fueter_right_variable(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    ell = smp.rng.randrange(setting.p + 1)
    point = smp.ambient_point(setting)
    z, z_right = fueter_variable(setting, ell), fueter_variable_right(setting, ell)
    if ell:
        return _compare(z_right.evaluate(point), conj(z.evaluate(point)), ell=ell, point=point)
    reflected = point[: setting.p + 1] + [-x for x in point[setting.p + 1 :]]
    return _compare(z_right.evaluate(point), conj(z.evaluate(reflected)), ell=ell, point=point)


def _fueter_regular(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    k = smp.multi_index(setting.p, smp.rng.randint(0, min(degree, 3)))
    S = extract(fueter_polynomial(setting, k))
    return None if cr_check(S) else _fail(k=k, stem=S)


# Fueter-Sce map

def _fs_monogenic(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    image = fueter_sce_map(S)
    residual = dirac(materialize(image))
    if vekua_check(image) and residual.is_zero():
        return None
    return _fail(stem=S, image=image, residual=residual)


def _fs_route_consistency(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    return _first([
        _compare(laplacian_power_stem(S, k), laplacian_power_ambient(S, k), stem=S, k=k)
        for k in range((setting.q + 1) // 2 + 1)
    ])


def _fs_annihilation(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    residual = laplacian_power(materialize(S), (setting.q + 1) // 2)
    return None if residual.is_zero() else _fail(stem=S, residual=residual)


def _fs_dirac_route(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    f = materialize(S)
    return _first([
        _compare(materialize(dirac_of_laplacian_power(S, k)), dirac(laplacian_power(f, k)), stem=S, k=k)  # type: ignore[arg-type]
        for k in range((setting.q - 1) // 2 + 1)
    ])


def _fs_constants(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    q = setting.q
    return _compare(c_q(q, (q - 1) // 2), double_factorial(q - 1), q=q)


# Diagrams

def _diagram(verifier: Callable[[AmbientPoly], DiagramReport]) -> LawFn:
    def law(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
        f0 = smp.seed_poly(setting, degree)
        report = verifier(f0)
        if report.passed:
            return None
        return _fail(f0=f0, failed=", ".join(report.failed_checks))

    return law


def _diagram_H(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    if setting.q < 3:
        return None
    return _diagram(verify_diagram_H)(smp, setting, degree)


# Kernels

def _kernel_order_bound(setting: HypercomplexSetting) -> int:
    return 4 if setting.m <= 3 else 2


def _kernel_lowering(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    checks: list[Failure] = []
    for k in range(1, _kernel_order_bound(setting) + 1):
        E = poly_kernel(setting, k)
        for n in range(1, k + 1):
            expected = poly_kernel(setting, k - n) if n < k else E.scale(0)
            for right in (False, True):
                lhs = kelvin_dirac_power(E, n, right=right)
                checks.append(_compare(lhs, expected, k=k, n=n, right=right))
    return _first(checks)


def _kernel_harmonic(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    units = tuple(setting.v)
    fundamental = radial_power(units, setting.nvars - 2)
    return _compare(kelvin_laplacian(fundamental), fundamental.scale(0), nvars=setting.nvars)


def _slice_kernel(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    omega = smp.sphere_point(setting)
    checks: list[Failure] = []
    for point in (None, omega):
        K = slice_cauchy_kernel(setting, point)
        zero = K.scale(0)
        checks.append(_compare(kelvin_dirac(K), zero, omega=point, side="left"))
        checks.append(_compare(kelvin_dirac_right(K), zero, omega=point, side="right"))
    return _first(checks)


def _slice_kernel_lowering(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    omega = smp.sphere_point(setting)
    checks: list[Failure] = []
    for point in (None, omega):
        for k in range(1, 4):
            E = slice_poly_kernel(setting, k, point)
            for n in range(1, k + 1):
                expected = slice_poly_kernel(setting, k - n, point) if n < k else E.scale(0)
                for right in (False, True):
                    lhs = kelvin_dirac_power(E, n, right=right)
                    checks.append(_compare(lhs, expected, k=k, n=n, right=right))
    return _first(checks)


# Representation formula

def _representation(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    S = smp.regular_stem(setting, degree)
    base, r = smp.base_point(setting), smp.radius()
    omega, eta = smp.sphere_point(setting), smp.sphere_point(setting)
    if representation_check(S, base, r, omega, eta):
        return None
    return _fail(stem=S, base=base, r=r, omega=omega.omega, eta=eta.omega)


def _slot_roundtrip(smp: RationalSampler, setting: HypercomplexSetting, degree: int) -> Failure:
    f0 = smp.seed_poly(setting, degree)
    return _compare(slots_to_seed(setting, seed_to_slots(f0)), f0, f0=f0)


LAWS: list[Law] = [
    Law(Suite.ALGEBRA, "alternative", _alternative),
    Law(Suite.ALGEBRA, "artin", _artin),
    Law(Suite.ALGEBRA, "real_associates", _real_associates),
    Law(Suite.ALGEBRA, "moufang", _moufang),
    Law(Suite.ALGEBRA, "anti_involution", _anti_involution),
    Law(Suite.ALGEBRA, "inverse", _inverse),
    Law(Suite.ALGEBRA, "cone_and_basis", _cone),
    Law(Suite.POLY, "leibniz", _leibniz),
    Law(Suite.POLY, "derivatives_commute", _derivatives_commute),
    Law(Suite.POLY, "evaluation_multiplicative", _evaluation_multiplicative),
    Law(Suite.POLY, "real_factor_associates", _real_factor_associates),
    Law(Suite.POLY, "distributive", _distributive),
    Law(Suite.POLY, "reflect_involution", _reflect_involution),
    Law(Suite.OPERATORS, "laplacian_routes", _laplacian_routes),
    Law(Suite.OPERATORS, "split_sums", _split_sums),
    Law(Suite.OPERATORS, "splitting_lemma", _splitting_lemma),
    Law(Suite.OPERATORS, "gamma_identity", _gamma_identity),
    Law(Suite.OPERATORS, "slice_dirac_difference", _slice_dirac_difference),
    Law(Suite.OPERATORS, "stem_operator_routes", _stem_operator_routes),
    Law(Suite.OPERATORS, "slice_harmonic", _slice_harmonic),
    Law(Suite.OPERATORS, "symmetrized_powers", _symmetrized_powers),
    Law(Suite.OPERATORS, "inter_relation", _inter_relation),
    Law(Suite.CK, "regular", _ck_regular),
    Law(Suite.CK, "trace", _ck_trace),
    Law(Suite.CK, "slice_dirac", _ck_slice_dirac),
    Law(Suite.CK, "uniqueness", _ck_uniqueness),
    Law(Suite.CK, "extract_materialize", _ck_extract),
    Law(Suite.CK, "right_extension", _ck_right),
    Law(Suite.GCK, "monogenic", _gck_monogenic),
    Law(Suite.GCK, "vekua", _gck_vekua),
    Law(Suite.GCK, "recurrence", _gck_recurrence),
    Law(Suite.GCK, "trace", _gck_trace),
    Law(Suite.GCK, "q1_is_ck", _gck_q1_is_ck),
    Law(Suite.HGCK, "harmonic", _hgck_harmonic),
    Law(Suite.HGCK, "initial_conditions", _hgck_initial),
    Law(Suite.HGCK, "even_odd_split", _hgck_split),
    Law(Suite.HGCK, "gck_decomposition", _hgck_corollary),
    Law(Suite.HGCK, "dirac_bar", _hgck_dirac_bar),
    Law(Suite.HGCK, "from_gck_parts", _hgck_from_gck),
    Law(Suite.FUETER, "v_equals_p", _fueter_v_equals_p),
    Law(Suite.FUETER, "comb_independent", _fueter_comb_independent),
    Law(Suite.FUETER, "variable_is_ck", _fueter_variable_is_ck),
    Law(Suite.FUETER, "right_variable", _fueter_right_variable),
    Law(Suite.FUETER, "regular", _fueter_regular),
    Law(Suite.FUETER_SCE, "monogenic_image", _fs_monogenic),
    Law(Suite.FUETER_SCE, "route_consistency", _fs_route_consistency),
    Law(Suite.FUETER_SCE, "annihilation", _fs_annihilation),
    Law(Suite.FUETER_SCE, "dirac_route", _fs_dirac_route),
    Law(Suite.FUETER_SCE, "constants", _fs_constants, deterministic=True),
    Law(Suite.DIAGRAMS, "diagram_M", _diagram(verify_diagram_M)),
    Law(Suite.DIAGRAMS, "diagram_MH", _diagram(verify_diagram_MH)),
    Law(Suite.DIAGRAMS, "diagram_H", _diagram_H),
    Law(Suite.KERNELS, "poly_kernel_lowering", _kernel_lowering, deterministic=True),
    Law(Suite.KERNELS, "fundamental_solution", _kernel_harmonic, deterministic=True),
    Law(Suite.KERNELS, "slice_kernel_annihilated", _slice_kernel),
    Law(Suite.KERNELS, "slice_kernel_lowering", _slice_kernel_lowering),
    Law(Suite.REPRESENTATION, "representation_formula", _representation),
    Law(Suite.REPRESENTATION, "seed_slots", _slot_roundtrip),
]
