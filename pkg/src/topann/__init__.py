"""Annihilators of top local cohomology over Stanley-Reisner rings.

Exact computation of cohomological dimension, certified annihilator bounds for
the top local cohomology of R = S/J with J squarefree monomial, the
three-prime counterexample family for Lynch's conjecture, and an independent
multigraded Cech oracle.
"""

from .annihilator import (
    AnnBoundsReport,
    HeightReport,
    annihilator_bounds,
    height_report,
    localization_kernel,
    symbolic_power,
    top_vanishing_ideal,
    torsion_ideal,
)
from .cech import (
    AnnihilationVerdict,
    CechReport,
    DegreeBox,
    annihilation_check,
    cech_ranks,
    localization_piece,
)
from .cohomdim import (
    BettiTable,
    CdReport,
    arithmetic_rank_upper,
    betti_numbers,
    cd_on_prime,
    cohomological_dimension,
    grade_on_prime,
    projective_dimension,
)
from .errors import GuardExceededError, InvalidInputError
from .linalg import (
    FieldSpec,
    VectorSpaceComplex,
    cohomology_ranks,
    reduced_homology_ranks,
)
from .lynch import (
    LynchInstance,
    LynchReport,
    build_instance,
    fixture,
    search_family,
    verify_instance,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    ideal_sum,
    intersect,
    minimalize,
    power,
    radical,
    saturate,
    variable_ideal,
)
from .stanley_reisner import (
    QuotientIdeal,
    QuotientRing,
    SimplicialComplex,
    height_in_quotient,
    krull_dim,
    minimal_primes,
    sr_complex_of,
)

__all__ = [
    "AnnBoundsReport",
    "AnnihilationVerdict",
    "BettiTable",
    "CdReport",
    "CechReport",
    "DegreeBox",
    "FieldSpec",
    "GuardExceededError",
    "HeightReport",
    "InvalidInputError",
    "LynchInstance",
    "LynchReport",
    "Monomial",
    "MonomialIdeal",
    "QuotientIdeal",
    "QuotientRing",
    "SimplicialComplex",
    "VectorSpaceComplex",
    "annihilation_check",
    "annihilator_bounds",
    "arithmetic_rank_upper",
    "betti_numbers",
    "build_instance",
    "cd_on_prime",
    "cech_ranks",
    "cohomological_dimension",
    "cohomology_ranks",
    "colon",
    "contains",
    "fixture",
    "grade_on_prime",
    "height_in_quotient",
    "height_report",
    "ideal_sum",
    "intersect",
    "krull_dim",
    "localization_kernel",
    "localization_piece",
    "minimal_primes",
    "minimalize",
    "power",
    "projective_dimension",
    "radical",
    "reduced_homology_ranks",
    "saturate",
    "search_family",
    "sr_complex_of",
    "symbolic_power",
    "top_vanishing_ideal",
    "torsion_ideal",
    "variable_ideal",
    "verify_instance",
]

__version__ = "0.1.0"
