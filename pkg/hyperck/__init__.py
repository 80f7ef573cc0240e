"""
hyperck: exact generalized partial-slice monogenic function theory.

Polynomial inputs over Clifford algebras R_{0,n} and the octonions, with
exact rational arithmetic throughout. Every series terminates, so the
Cauchy-Kovalevskaya extensions, the Fueter-Sce map and the operator
identities between them become checkable polynomial identities.

Usage:
    hyperck algebra-info --setting octonion,m=7,p=4
    hyperck ck-extend --setting clifford:n=3 --input samples/seed_x0_squared.json
    hyperck verify-theorems --suite diagrams --q 3,5 --degree 5 --trials 50 --seed 42
"""

__version__ = "0.1.0"

from hyperck.algebra import AlgebraElement, HypercomplexSetting, SpherePoint, make_algebra
from hyperck.errors import HyperckError
from hyperck.extensions import ck_extend, fueter_polynomial, gck_extend, hgck_extend
from hyperck.fueter_sce import fueter_sce_map, verify_diagram_H, verify_diagram_M, verify_diagram_MH
from hyperck.kernels import KelvinFunction, poly_kernel, slice_cauchy_kernel
from hyperck.poly import AmbientPoly
from hyperck.stem import StemPair, extract, materialize

__all__ = [
    # Algebra
    "make_algebra",
    "AlgebraElement",
    "HypercomplexSetting",
    "SpherePoint",
    # Polynomials and stems
    "AmbientPoly",
    "StemPair",
    "materialize",
    "extract",
    # Extensions
    "ck_extend",
    "gck_extend",
    "hgck_extend",
    "fueter_polynomial",
    # Fueter-Sce
    "fueter_sce_map",
    "verify_diagram_M",
    "verify_diagram_MH",
    "verify_diagram_H",
    # Kernels
    "KelvinFunction",
    "poly_kernel",
    "slice_cauchy_kernel",
    # Errors
    "HyperckError",
]
