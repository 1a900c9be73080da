"""Exact preperiodic portraits of rational maps over the rationals.

The package computes, with integer arithmetic only, the full set of rational
preperiodic points of a rational self-map of the projective line, determines
the primes of bad reduction, certifies that cross terms between tail and
periodic points are S-units, and evaluates explicit upper bounds on portrait
sizes.
"""

from .certify import (
    BoundCheckItem,
    BoundReport,
    CertificateBundle,
    SUnitCertificate,
    check_bounds,
    check_image_normalization,
    evaluate_bounds,
    make_certificates,
    s_unit_rank,
    thue_mahler_coset_count,
    unit_equation_count,
    unit_equation_pair_count,
    verify_portrait_bounds,
)
from .dynatomic import (
    PeriodicPoint,
    PeriodicSearchResult,
    baker_degree_check,
    dynatomic_polynomial,
    formal_period_degree,
    formal_period_orders,
    multiplier,
    period_polynomial,
    rational_periodic_points,
)
from .dynmap import (
    DegenerateMapError,
    InvariantViolation,
    OrbitRecord,
    PreimageResult,
    RationalMap,
    apply,
    apply_rational,
    build_map,
    has_good_reduction,
    map_from_forms,
    orbit,
    preimages,
)
from .families import (
    Claim,
    ClaimReport,
    FamilySpec,
    family_n_max,
    family_portrait,
    generate,
    verify_claims,
)
from .forms import BinaryForm, form_from_poly, rational_roots, resultant
from .portrait import (
    CompletenessFlags,
    Portrait,
    PortraitCounts,
    PortraitOverflowError,
    TailRecord,
    brute_force_preperiodic,
    build_portrait,
    classify,
    rational_points_up_to,
)
from .qarith import (
    INFINITY,
    OO,
    PrimeSet,
    ProjPoint,
    factor,
    is_prime,
    is_s_unit,
    log_distance,
    valuation,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "BoundCheckItem",
    "BoundReport",
    "CertificateBundle",
    "Claim",
    "ClaimReport",
    "CompletenessFlags",
    "DegenerateMapError",
    "FamilySpec",
    "INFINITY",
    "InvariantViolation",
    "OO",
    "OrbitRecord",
    "PeriodicPoint",
    "PeriodicSearchResult",
    "Portrait",
    "PortraitCounts",
    "PortraitOverflowError",
    "PreimageResult",
    "PrimeSet",
    "ProjPoint",
    "RationalMap",
    "SUnitCertificate",
    "TailRecord",
    "apply",
    "apply_rational",
    "baker_degree_check",
    "brute_force_preperiodic",
    "build_map",
    "build_portrait",
    "check_bounds",
    "check_image_normalization",
    "classify",
    "dynatomic_polynomial",
    "evaluate_bounds",
    "factor",
    "family_n_max",
    "family_portrait",
    "form_from_poly",
    "formal_period_degree",
    "formal_period_orders",
    "generate",
    "has_good_reduction",
    "is_prime",
    "is_s_unit",
    "log_distance",
    "make_certificates",
    "map_from_forms",
    "multiplier",
    "orbit",
    "period_polynomial",
    "preimages",
    "rational_periodic_points",
    "rational_points_up_to",
    "rational_roots",
    "resultant",
    "s_unit_rank",
    "thue_mahler_coset_count",
    "unit_equation_count",
    "unit_equation_pair_count",
    "valuation",
    "verify_claims",
    "verify_portrait_bounds",
]
