"""Tame finite partial orders.

Detection of the forbidden pattern, signature reduction, tame rank, the
canonical embedding into the coordinate-pair templates, and the
reduce/embed/inflate/restrict realization pipeline, all cross-checked by
exhaustive small-instance sweeps.
"""

from .embedding import (
    Embedding,
    embeds_r22,
    find_embedding,
    pattern_r22,
    pattern_s_n2,
    verify_embedding,
    witness_embedding,
)
from .enumeration import (
    GeneratorConfig,
    VerificationReport,
    all_labeled_posets,
    random_poset,
    verify_proposition,
    verify_sampled,
)
from .errors import (
    BudgetExceeded,
    CycleDetected,
    DuplicateElement,
    FormatError,
    InternalInvariantViolation,
    InvalidMultiplicity,
    InvalidParameter,
    NotReduced,
    NotTame,
    PosetError,
    SizeLimitExceeded,
    UnknownElement,
)
from .poset import (
    Poset,
    build_poset,
    cu_set,
    down_set,
    is_isomorphic,
    restrict,
    up_set,
    well_founded_rank,
)
from .tame import (
    M_value,
    ReductionResult,
    SetFamily,
    TameReport,
    canonical_embedding,
    check_claim_inequalities,
    cu_family,
    d_comparable,
    d_family,
    frak_d_family,
    is_reduced,
    is_tame,
    m_value,
    minimal_rank_bruteforce,
    reduce,
    tame_rank,
    u_comparable,
)
from .templates import (
    InflatedPoint,
    OrderPair,
    RealizeResult,
    cummings_blocks,
    inflate,
    order_pair_label,
    parse_order_pair,
    r_lambda,
    realize,
)
from .textfmt import format_poset, parse_poset, poset_json

__all__ = [
    "BudgetExceeded",
    "CycleDetected",
    "DuplicateElement",
    "Embedding",
    "FormatError",
    "GeneratorConfig",
    "InflatedPoint",
    "InternalInvariantViolation",
    "InvalidMultiplicity",
    "InvalidParameter",
    "M_value",
    "NotReduced",
    "NotTame",
    "OrderPair",
    "Poset",
    "PosetError",
    "RealizeResult",
    "ReductionResult",
    "SetFamily",
    "SizeLimitExceeded",
    "TameReport",
    "UnknownElement",
    "VerificationReport",
    "all_labeled_posets",
    "build_poset",
    "canonical_embedding",
    "check_claim_inequalities",
    "cu_family",
    "cu_set",
    "cummings_blocks",
    "d_comparable",
    "d_family",
    "down_set",
    "embeds_r22",
    "find_embedding",
    "format_poset",
    "frak_d_family",
    "inflate",
    "is_isomorphic",
    "is_reduced",
    "is_tame",
    "m_value",
    "minimal_rank_bruteforce",
    "order_pair_label",
    "parse_order_pair",
    "parse_poset",
    "pattern_r22",
    "pattern_s_n2",
    "poset_json",
    "r_lambda",
    "random_poset",
    "realize",
    "reduce",
    "restrict",
    "tame_rank",
    "u_comparable",
    "up_set",
    "verify_embedding",
    "verify_proposition",
    "verify_sampled",
    "well_founded_rank",
    "witness_embedding",
]
