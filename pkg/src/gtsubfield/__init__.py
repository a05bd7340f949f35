"""Generalized toric codes over GF(p^s) and their subfield-subcodes over F_p."""

from .exponents import (
    CyclotomicCoset,
    ExponentSet,
    all_cosets,
    contained_cosets,
    coset_of,
    hat,
    u_hat,
    u_perp,
)
from .galois import ZERO, FieldError, GaloisField, build_field
from .subfield import (
    CosetPolynomial,
    annihilator,
    coset_poly,
    dual_as_subcode,
    dual_subfield_basis,
    dual_subfield_code,
    same_row_space,
    subfield_basis,
    subfield_subcode,
    subfield_subcode_oracle,
    trace_poly,
)
from .torus import (
    LinearCode,
    SparsePoly,
    Torus,
    dual_gt_code,
    evaluate,
    frobenius_poly,
    gt_code,
    theta_power,
    theta_scale,
    torus_points,
)
from .weights import (
    BudgetExceeded,
    DistanceReport,
    WeightDistribution,
    macwilliams,
    min_distance,
    pair_distances,
    weight_distribution,
)

__version__ = "0.1.0"
