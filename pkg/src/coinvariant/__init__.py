"""Coinvariant stresses, inverse systems and Lefschetz properties of simplicial complexes."""

from .artinian import ArtinianSpec, GradedRankReport, guaranteed_failure, hilbert_function, lefschetz_verdict
from .complex import (
    ComplexError,
    SimplicialComplex,
    classify_pseudomanifold,
    fhg_vectors,
    from_facets,
    link,
    load_complex,
    minimal_nonfaces,
    simplex_boundary,
)
from .compositions import count_a, count_b, verify_identities
from .homology import Chain, boundary_matrix, reduced_betti, reisner_check, top_cycle_space
from .inverse_systems import (
    DualPolynomial,
    Polynomial,
    StressProfile,
    contract,
    dual_lefschetz_ranks,
    dual_module_generators,
    elementary_symmetric,
    perp_basis,
    top_stress,
    vandermonde,
)
from .linalg import QQ, ExactMatrix, Field, kernel_basis, rank
from .random_lm import LMConfig, MonteCarloReport, monte_carlo, sample_complex, threshold_cd

__version__ = "0.1.0"
