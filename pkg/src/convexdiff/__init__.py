"""Convex subsets of difference sets: constructions, gluing, matchings, and oracles."""

from .claims import (
    GROWTH_FAMILIES,
    Report,
    growth_csv,
    growth_table,
    verify_claim_2_1,
    verify_claim_2_2,
    verify_claims_3,
    verify_thm1_size,
)
from .constructions import (
    GlueTrace,
    SpliceRecord,
    Thm1Params,
    glue_chain,
    glue_pair,
    squares_set,
    thm1_block,
    thm1_set,
    thm2_matching,
    thm3_block_of,
    thm3_set,
    thm4_matching,
)
from .errors import (
    ConvexDiffError,
    InsufficientN,
    InvalidInput,
    InvalidMatching,
    InvalidParams,
    NoSplice,
    TooLarge,
)
from .exact import (
    DifferenceBlock,
    ExactScalar,
    Matching,
    RealSet,
    as_exact,
    count_representations,
    difference_set,
    gen_convex_random,
    is_convex,
    is_weakly_convex,
    restricted_difference_set,
    restricted_sum_set,
    scalar_from_json,
    scalar_to_json,
    sum_set,
)
from .oracles import (
    ConvexSubsetStream,
    OracleResult,
    enumerate_convex_subsets,
    iter_convex_matchings,
    lcs_convex,
    lcs_convex_bruteforce,
    max_convex_matching,
    max_weakly_convex_no4ap,
)

__version__ = "0.1.0"

__all__ = [
    "ConvexDiffError",
    "InvalidInput",
    "InvalidMatching",
    "InvalidParams",
    "NoSplice",
    "InsufficientN",
    "TooLarge",
    "ExactScalar",
    "RealSet",
    "Matching",
    "DifferenceBlock",
    "as_exact",
    "scalar_to_json",
    "scalar_from_json",
    "is_convex",
    "is_weakly_convex",
    "difference_set",
    "sum_set",
    "restricted_difference_set",
    "restricted_sum_set",
    "count_representations",
    "gen_convex_random",
    "Thm1Params",
    "GlueTrace",
    "SpliceRecord",
    "thm1_set",
    "thm1_block",
    "glue_pair",
    "glue_chain",
    "thm2_matching",
    "thm3_set",
    "thm3_block_of",
    "thm4_matching",
    "squares_set",
    "OracleResult",
    "ConvexSubsetStream",
    "lcs_convex",
    "lcs_convex_bruteforce",
    "max_convex_matching",
    "max_weakly_convex_no4ap",
    "enumerate_convex_subsets",
    "iter_convex_matchings",
    "Report",
    "verify_claim_2_1",
    "verify_claim_2_2",
    "verify_thm1_size",
    "verify_claims_3",
    "growth_table",
    "growth_csv",
    "GROWTH_FAMILIES",
]
