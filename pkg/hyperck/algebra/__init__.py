"""
Exact arithmetic in real alternative *-algebras.

Provides:
- Clifford R_{0,n} and octonion multiplication tables
- Exact rational elements with conjugation, trace, norm and associator
- Hypercomplex settings with the (p, q) variable split and rational sphere points
"""

from hyperck.algebra.descriptor import AlgebraDescriptor, AlgebraKind, make_algebra
from hyperck.algebra.element import (
    AlgebraElement,
    ConeMembership,
    as_fraction,
    associator,
    cone_membership,
    conj,
    inverse,
    mul,
    trace_norm,
)
from hyperck.algebra.setting import (
    BasisCondition,
    HypercomplexSetting,
    SpherePoint,
    random_rational,
    rational_sphere_point,
    sphere_point_from_parameters,
)

__all__ = [
    # Tables
    "AlgebraDescriptor",
    "AlgebraKind",
    "make_algebra",
    # Elements
    "AlgebraElement",
    "ConeMembership",
    "as_fraction",
    "associator",
    "cone_membership",
    "conj",
    "inverse",
    "mul",
    "trace_norm",
    # Settings
    "BasisCondition",
    "HypercomplexSetting",
    "SpherePoint",
    "random_rational",
    "rational_sphere_point",
    "sphere_point_from_parameters",
]
