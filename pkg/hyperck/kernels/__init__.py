"""
Kelvin-type functions N(x)|x|^-s and the Cauchy kernels they house.
"""

from hyperck.kernels.cauchy import (
    poly_kernel,
    slice_cauchy_kernel,
    slice_frame,
    slice_poly_kernel,
    slice_unit,
)
from hyperck.kernels.kelvin import (
    KelvinFunction,
    kelvin_derivative,
    kelvin_dirac,
    kelvin_dirac_power,
    kelvin_dirac_right,
    kelvin_laplacian,
    norm_squared,
    radial_power,
)

__all__ = [
    # Kelvin space
    "KelvinFunction",
    "norm_squared",
    "radial_power",
    "kelvin_derivative",
    "kelvin_dirac",
    "kelvin_dirac_right",
    "kelvin_laplacian",
    "kelvin_dirac_power",
    # Kernels
    "poly_kernel",
    "slice_unit",
    "slice_frame",
    "slice_cauchy_kernel",
    "slice_poly_kernel",
]
