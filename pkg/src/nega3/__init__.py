"""Ternary self-dual codes from 3x3 tilings of negacirculant blocks.

The package builds [6n, 3n] codes over GF(3) whose generator is (I | M)
with M a 3x3 block matrix of n x n negacirculants, verifies self-duality
and minimum-weight data with exact integer arithmetic, enumerates the
reduced search space of first-row triples, and checks findings against
the carried registry of known codes and their minimum-word counts.
"""

from .classical import Fingerprint, extended_qr48, fingerprint, pless_symmetry
from .errors import (
    GuardError,
    InternalInconsistencyError,
    LengthMismatchError,
    Nega3Error,
    NeighborCodeError,
    NeighborError,
    NeighborMembershipError,
    NeighborWeightError,
    RegistryError,
    SelfDualLengthError,
    VectorFileError,
)
from .gf3 import Code, Gf3Matrix, Gf3Vector, dual_basis, rref
from .gleason import (
    AlphaConstraint,
    EnumeratorFamily,
    IntPoly,
    alpha_constraint,
    distribution_from_alpha,
    gleason_basis,
    near_extremal_family,
)
from .nega import (
    BlockTransform,
    CodeSpec,
    apply_transform,
    block_row_vectors,
    build_generator,
    f_value,
    generator_matrix,
    is_self_dual,
    nega_matrix,
    negashift,
    right_half_matrix,
    row_gram_is_two,
    row_pair_gram,
    satisfies_conditions,
    self_dual_violations,
    vector_from_f,
)
from .registry import (
    GammaSet,
    Registry,
    RegistryEntry,
    format_vector_record,
    ingest_vector_file,
    load_registry,
)
from .search import (
    BetaStatus,
    Finding,
    NoveltyReport,
    SearchPlan,
    beta_set_matches,
    enumerate_candidates,
    neighbor,
    neighbor_sweep,
    novelty_report,
    read_findings,
    run_search,
)
from .weights import (
    ExtremalityClass,
    WeightProfile,
    classify,
    count_weight,
    covering_lower_bound,
    enumeration_cost,
    full_distribution,
    min_weight,
    ms_bound,
    near_extremal_weight,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaConstraint",
    "BetaStatus",
    "BlockTransform",
    "Code",
    "CodeSpec",
    "EnumeratorFamily",
    "ExtremalityClass",
    "Finding",
    "Fingerprint",
    "GammaSet",
    "Gf3Matrix",
    "Gf3Vector",
    "GuardError",
    "IntPoly",
    "InternalInconsistencyError",
    "LengthMismatchError",
    "Nega3Error",
    "NeighborCodeError",
    "NeighborError",
    "NeighborMembershipError",
    "NeighborWeightError",
    "NoveltyReport",
    "Registry",
    "RegistryEntry",
    "RegistryError",
    "SearchPlan",
    "SelfDualLengthError",
    "VectorFileError",
    "WeightProfile",
    "alpha_constraint",
    "apply_transform",
    "beta_set_matches",
    "block_row_vectors",
    "build_generator",
    "classify",
    "count_weight",
    "covering_lower_bound",
    "distribution_from_alpha",
    "dual_basis",
    "enumerate_candidates",
    "enumeration_cost",
    "extended_qr48",
    "f_value",
    "fingerprint",
    "format_vector_record",
    "full_distribution",
    "generator_matrix",
    "gleason_basis",
    "ingest_vector_file",
    "is_self_dual",
    "load_registry",
    "min_weight",
    "ms_bound",
    "near_extremal_family",
    "near_extremal_weight",
    "nega_matrix",
    "negashift",
    "neighbor",
    "neighbor_sweep",
    "novelty_report",
    "pless_symmetry",
    "read_findings",
    "right_half_matrix",
    "row_gram_is_two",
    "row_pair_gram",
    "rref",
    "run_search",
    "satisfies_conditions",
    "self_dual_violations",
    "vector_from_f",
]
