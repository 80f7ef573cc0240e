"""
Differential operators: Dirac and Laplace operators on ambient polynomials,
the slice operator D_omega, the spherical Dirac operator, and their stem forms.
"""

from hyperck.operators.dirac import (
    angular_momentum,
    dirac,
    dirac_bar,
    dirac_bar_p,
    dirac_bar_p_right,
    dirac_bar_right,
    dirac_p,
    dirac_p_right,
    dirac_power,
    dirac_power_symmetrized,
    dirac_right,
    dirac_split,
    frame_sum,
    gamma_spherical,
    laplacian,
    laplacian_p,
    laplacian_power,
    slice_dirac,
    slice_dirac_power,
    slice_dirac_right,
    slice_dirac_slots,
    slice_restrict,
)
from hyperck.operators.stem_ops import (
    cr_check,
    cr_residual,
    d_u,
    inter_relation_residual,
    radial_iterate,
    slice_laplacian_stem,
    stem_dirac,
    stem_dirac_bar,
    stem_laplacian,
    times_u,
    vekua_check,
    vekua_residual,
)

__all__ = [
    # Ambient operators
    "frame_sum",
    "dirac",
    "dirac_bar",
    "dirac_right",
    "dirac_bar_right",
    "dirac_split",
    "laplacian",
    "laplacian_power",
    "dirac_power",
    "dirac_power_symmetrized",
    # Slice-base operators
    "dirac_p",
    "dirac_bar_p",
    "dirac_p_right",
    "dirac_bar_p_right",
    "laplacian_p",
    # Spherical and slice operators
    "angular_momentum",
    "gamma_spherical",
    "slice_restrict",
    "slice_dirac",
    "slice_dirac_slots",
    "slice_dirac_right",
    "slice_dirac_power",
    # Stem operators
    "d_u",
    "times_u",
    "radial_iterate",
    "cr_residual",
    "cr_check",
    "vekua_residual",
    "vekua_check",
    "inter_relation_residual",
    "stem_dirac",
    "stem_dirac_bar",
    "stem_laplacian",
    "slice_laplacian_stem",
]
