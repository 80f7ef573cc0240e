"""
Cauchy-Kovalevskaya extensions (CK, GCK, HGCK), Fueter variables and
Fueter polynomials on polynomial data.
"""

from hyperck.extensions.ck import ck_extend, ck_extend_right, restrict_to_base
from hyperck.extensions.fueter import (
    fueter_polynomial,
    fueter_variable,
    fueter_variable_right,
    multi_indices,
    seed_monomial,
    v_polynomial,
)
from hyperck.extensions.gck import (
    even_weight,
    gck_coefficients,
    gck_extend,
    gck_stem,
    hgck_extend,
    hgck_stem,
    initial_data,
    odd_weight,
)

__all__ = [
    # CK
    "ck_extend",
    "ck_extend_right",
    "restrict_to_base",
    # GCK / HGCK
    "even_weight",
    "odd_weight",
    "gck_coefficients",
    "gck_stem",
    "gck_extend",
    "hgck_stem",
    "hgck_extend",
    "initial_data",
    # Fueter
    "fueter_variable",
    "fueter_variable_right",
    "seed_monomial",
    "fueter_polynomial",
    "v_polynomial",
    "multi_indices",
]
