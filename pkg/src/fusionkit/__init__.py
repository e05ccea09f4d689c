"""Exact-arithmetic toolkit for fusion rings, modular data of affine sl2/sl3
categories, and Z3 simple-current condensation."""

from .cyclo import (
    BadAutomorphism,
    CapExceeded,
    CycNum,
    quadratic,
    render,
    root_of_unity_from_exponent,
    sin_pi,
    sqrt_of,
    zeta,
)
from .ring import (
    FusionRing,
    ModularData,
    Report,
    balancing_S,
    count_trivial_twists,
    deligne_product,
    fp_dims,
    group_ring,
    near_group_recognize,
    pointed_cyclic,
    sum_of_squares_search,
    verify_modular,
    verify_ring,
    verlinde,
)
from .wzw import AlgebraSpec, alcove, fuse, fusion_ring, modular_data, qdim, twist
from .condense import (
    CondensedCategory,
    condensed_modular_data,
    etale_check,
    near_group_pipeline,
    near_group_ring,
    resolve_split,
)

__all__ = [
    "AlgebraSpec",
    "BadAutomorphism",
    "CapExceeded",
    "CondensedCategory",
    "CycNum",
    "FusionRing",
    "ModularData",
    "Report",
    "alcove",
    "balancing_S",
    "condensed_modular_data",
    "count_trivial_twists",
    "deligne_product",
    "etale_check",
    "fp_dims",
    "fuse",
    "fusion_ring",
    "group_ring",
    "modular_data",
    "near_group_pipeline",
    "near_group_recognize",
    "near_group_ring",
    "pointed_cyclic",
    "qdim",
    "quadratic",
    "render",
    "resolve_split",
    "root_of_unity_from_exponent",
    "sin_pi",
    "sqrt_of",
    "sum_of_squares_search",
    "twist",
    "verify_modular",
    "verify_ring",
    "verlinde",
    "zeta",
]

__version__ = "0.1.0"
