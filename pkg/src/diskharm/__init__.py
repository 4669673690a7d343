"""Planar harmonic mappings of the unit disk.

Shear construction of harmonic maps from prevertex families, linear
combinations with exact combined-dilatation algebra, Cohn-reduction zero
counting for local-univalence certificates, and numerical checks of
convexity in the directions of the coordinate axes.
"""

from .maps import (
    AnalyticFunction,
    DomainError,
    FamilyParams,
    MonomialDilatation,
    UnsupportedDilatation,
    closed_form_parts_alpha,
    closed_form_parts_example213,
    prevertex_alpha,
    prevertex_theta,
)
from .poly import (
    NoConvergence,
    Polynomial,
    PreconditionViolated,
    ZeroCount,
    cohn_step,
    conj_reciprocal,
    count_zeros_unit_disk,
    eval_poly,
    roots,
)
from .shear import (
    HarmonicMap,
    LinCombSpec,
    QuadratureFailure,
    QuadratureParams,
    RationalDilatation,
    combined_dilatation_eq5,
    dilatation_example213,
    gamma_polys,
    gamma_rational,
    lincomb,
    radial_integral,
    shear_construct,
)
from .verify import (
    DegenerateCurve,
    GatePrediction,
    GridSpec,
    UnknownScenario,
    VerificationReport,
    check_direction_convexity,
    check_hs_criterion,
    check_sense_preserving,
    check_wang_condition,
    find_dilatation_violation,
    theorem_gate,
)

__version__ = "0.1.0"
