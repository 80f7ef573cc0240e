"""
Multivariate polynomials with algebra-valued coefficients.

Provides sparse polynomial arithmetic, formal derivatives, exact evaluation,
the reflection x_diamond, and products along explicit association trees.
"""

from hyperck.poly.ambient import (
    AlgebraPoly,
    AmbientPoly,
    Monomial,
    evaluate,
    graded_key,
    partial_derivative,
    poly_add,
    poly_mul,
    poly_scale,
    power_sum_expansion,
    reflect,
)
from hyperck.poly.assoc import AssocTree, all_trees, assoc_product

__all__ = [
    # Polynomials
    "AlgebraPoly",
    "AmbientPoly",
    "Monomial",
    "evaluate",
    "graded_key",
    "partial_derivative",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "power_sum_expansion",
    "reflect",
    # Association trees
    "AssocTree",
    "all_trees",
    "assoc_product",
]
