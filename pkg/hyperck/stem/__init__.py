"""
Stem pairs of generalized partial-slice functions.

Materialization to ambient polynomials, extraction back, partial even/odd
parts, spherical value and derivative, and the representation formula.
"""

from hyperck.stem.pair import (
    RepresentationResult,
    SphericalParts,
    StemPair,
    extract,
    is_slice_form,
    materialize,
    materialize_right,
    partial_even_odd,
    representation_check,
    representation_identity,
    rho_poly,
    seed_to_slots,
    slots_to_seed,
    spherical_parts,
    stem_coefficients,
    stem_names,
    substitute_rho,
    times_vector,
    u_coefficient,
    vector_power_times,
    vector_times,
    zero_slots,
)

__all__ = [
    # Types
    "RepresentationResult",
    "SphericalParts",
    "StemPair",
    # Stem <-> ambient
    "extract",
    "is_slice_form",
    "materialize",
    "materialize_right",
    "partial_even_odd",
    "spherical_parts",
    "stem_coefficients",
    # Representation formula
    "representation_check",
    "representation_identity",
    # Slot helpers
    "rho_poly",
    "seed_to_slots",
    "slots_to_seed",
    "stem_names",
    "substitute_rho",
    "times_vector",
    "u_coefficient",
    "vector_power_times",
    "vector_times",
    "zero_slots",
]
