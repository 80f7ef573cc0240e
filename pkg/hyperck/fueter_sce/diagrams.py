"""
The Fueter-Sce map on stems and the three commutative diagrams relating it
to the CK, GCK and HGCK extensions.

For a GPS-regular stem S with radial iterates (A_k, B_k):

    Delta^k f   = C_q(k) (A_k + omega B_k)
    D Delta^k f = -C_q(k+1) B_k / r

so the Fueter-Sce image (odd q) is (q-1)!! (A_h, B_h) with h = (q-1)/2.
Each verifier computes its routes independently from the seed f0 and also
runs the ambient route (materialize, then ambient operators).
"""

from __future__ import annotations

import logging

from hyperck.errors import CRViolationError, OddQRequiredError
from hyperck.extensions.ck import ck_extend
from hyperck.extensions.gck import gck_extend, hgck_extend
from hyperck.fueter_sce.constants import c_q, double_factorial, fs_constants
from hyperck.models.reports import DiagramReport, IdentityCheck
from hyperck.operators.dirac import dirac, dirac_bar, dirac_p, laplacian, laplacian_p, laplacian_power
from hyperck.operators.stem_ops import cr_check, radial_iterate
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly
from hyperck.stem.pair import StemPair, extract, materialize, partial_even_odd, zero_slots

logger = logging.getLogger(__name__)


def _require_regular(S: StemPair) -> None:
    if not cr_check(S):
        raise CRViolationError(f"Stem is not GPS-regular (Cauchy-Riemann residual nonzero): {S}")


def laplacian_power_stem(S: StemPair, k: int) -> StemPair:
    """Stem of Delta^k materialize(S) via C_q(k) times the k-th radial iterate."""
    _require_regular(S)
    return radial_iterate(S, k).scale(c_q(S.setting.q, k))


def laplacian_power_ambient(S: StemPair, k: int) -> StemPair:
    """Same stem through materialize, the ambient Laplacian and extract."""
    return extract(laplacian_power(materialize(S), k))  # type: ignore[arg-type]


def dirac_of_laplacian_power(S: StemPair, k: int) -> StemPair:
    """Stem of D Delta^k f: the even function -C_q(k+1) B_k / r."""
    _require_regular(S)
    b_k = radial_iterate(S, k).G2
    return StemPair(S.setting, b_k.scale(-c_q(S.setting.q, k + 1)), zero_slots(S.setting))


def fueter_sce_map(S: StemPair) -> StemPair:
    """
    Delta^((q-1)/2) on a GPS-regular stem; the image is monogenic.

    Raises:
        OddQRequiredError: q even
        CRViolationError: S does not satisfy the Cauchy-Riemann system
    """
    constants = fs_constants(S.setting.q)
    _require_regular(S)
    image = radial_iterate(S, constants.exponent).scale(double_factorial(S.setting.q - 1))
    logger.debug("Fueter-Sce map in %s: exponent %d", S.setting.name, constants.exponent)
    return image


# Diagram verifiers

def _identity(name: str, lhs: AlgebraPoly, rhs: AlgebraPoly, description: str = "") -> IdentityCheck:
    return IdentityCheck(
        name=name,
        passed=lhs == rhs,
        lhs=lhs.format(),
        rhs=rhs.format(),
        description=description,
    )


def _report(theorem: str, f0: AmbientPoly, checks: list[IdentityCheck]) -> DiagramReport:
    setting = f0.setting
    report = DiagramReport(
        theorem=theorem, setting=setting.name, q=setting.q, seed=f0.format(), checks=checks
    )
    if not report.passed:
        logger.info("Diagram %s failed in %s: %s", theorem, setting.name, report.failed_checks)
    return report


def verify_diagram_M(f0: AmbientPoly) -> DiagramReport:
    """Delta^h CK[f0] = gamma_q GCK[Delta_p^h f0], h = (q-1)/2."""
    setting = f0.setting
    constants = fs_constants(setting.q)
    h = constants.exponent
    zero = AmbientPoly.zero_in(setting)

    stem_route = materialize(fueter_sce_map(ck_extend(f0)))
    ambient_route = laplacian_power(materialize(ck_extend(f0)), h)
    gck_route = gck_extend(laplacian_p(setting, f0, h)).scale(constants.gamma)  # type: ignore[arg-type]

    return _report("M", f0, [
        _identity("fueter_sce_equals_gamma_gck", stem_route, gck_route,
                  "Fueter-Sce image of CK[f0] equals gamma_q GCK[Delta_p^h f0]"),
        _identity("stem_route_equals_ambient_route", stem_route, ambient_route,
                  "radial iterates agree with the ambient Laplacian power"),
        _identity("image_is_monogenic", dirac(stem_route), zero, "D of the image vanishes"),
    ])


def verify_diagram_MH(f0: AmbientPoly) -> DiagramReport:
    """
    PE and PO of Delta^h CK[f0] against HGCK:

        PE = gamma_q HGCK[Delta_p^h f0, 0]
        PO = (gamma_q / q) HGCK[0, Delta_p^h D_p f0]

    and both parts are harmonic.
    """
    setting = f0.setting
    constants = fs_constants(setting.q)
    h = constants.exponent
    zero = AmbientPoly.zero_in(setting)

    image = materialize(fueter_sce_map(ck_extend(f0)))
    even, odd = partial_even_odd(image)
    even_route = hgck_extend(laplacian_p(setting, f0, h), zero).scale(constants.gamma)  # type: ignore[arg-type]
    odd_seed = laplacian_p(setting, dirac_p(setting, f0), h)
    odd_route = hgck_extend(zero, odd_seed).scale(constants.gamma / setting.q)  # type: ignore[arg-type]

    return _report("MH", f0, [
        _identity("even_part_equals_hgck", even, even_route,
                  "PE of the image equals gamma_q HGCK[Delta_p^h f0, 0]"),
        _identity("odd_part_equals_hgck", odd, odd_route,
                  "PO of the image equals (gamma_q/q) HGCK[0, Delta_p^h D_p f0]"),
        _identity("even_part_harmonic", laplacian(even), zero, "Delta PE = 0"),
        _identity("odd_part_harmonic", laplacian(odd), zero, "Delta PO = 0"),
    ])


def verify_diagram_H(f0: AmbientPoly) -> DiagramReport:
    """
    D Delta^h' CK[f0] = gamma_q HGCK[Delta_p^h' D_p f0, 0], h' = (q-3)/2,
    and D-bar of that equals gamma_q GCK[Delta_p^((q-1)/2) f0].

    Raises:
        OddQRequiredError: q even or q < 3
    """
    setting = f0.setting
    constants = fs_constants(setting.q)
    if setting.q < 3:
        raise OddQRequiredError(f"odd q required with q >= 3 for this diagram, got q={setting.q}")
    h = (setting.q - 3) // 2
    zero = AmbientPoly.zero_in(setting)

    ambient_route = dirac(laplacian_power(materialize(ck_extend(f0)), h))  # type: ignore[arg-type]
    stem_route = materialize(dirac_of_laplacian_power(ck_extend(f0), h))
    hgck_seed = laplacian_p(setting, dirac_p(setting, f0), h)
    hgck_route = hgck_extend(hgck_seed, zero).scale(constants.gamma)  # type: ignore[arg-type]
    gck_route = gck_extend(laplacian_p(setting, f0, h + 1)).scale(constants.gamma)  # type: ignore[arg-type]

    return _report("H", f0, [
        _identity("dirac_laplacian_power_equals_gamma_hgck", ambient_route, hgck_route,
                  "D Delta^h' CK[f0] equals gamma_q HGCK[Delta_p^h' D_p f0, 0]"),
        _identity("stem_route_equals_ambient_route", stem_route, ambient_route,
                  "-C_q(h'+1) B_h'/r agrees with the ambient route"),
        _identity("dirac_bar_closure_equals_gamma_gck", dirac_bar(ambient_route), gck_route,
                  "D-bar of the left side equals gamma_q GCK[Delta_p^((q-1)/2) f0]"),
    ])
