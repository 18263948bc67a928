"""Generalised intuitionistic fuzzy soft sets: exact-decimal set algebra,
relations, and comparison-table ranking."""

from .degrees import (
    Degree,
    ONE,
    ZERO,
    get_precision,
    precision,
    set_precision,
    ulp,
)
from .errors import (
    ChainMismatchError,
    ContainmentError,
    CoverageError,
    DatasetError,
    DatasetParseError,
    DegreeError,
    GifssError,
    NormPairError,
    ParentMismatchError,
    UniverseMismatchError,
    ValidityError,
)
from .norms import (
    LUKASIEWICZ,
    MINMAX,
    NormPair,
    PRODUCT,
    builtin_pairs,
    pair_from_name,
    pair_names,
    register_pair,
    tconorm,
    tconorm_raw,
    tnorm,
    tnorm_raw,
)
from .sets import (
    Gifss,
    IfSet,
    IfsValue,
    Universe,
    equals,
    ifs_intersect,
    ifs_union,
    intersect,
    is_subset,
    union,
)
from .relations import (
    Gifsr,
    compose,
    compose_at,
    intersect_rel,
    inverse,
    is_subrelation,
    maximal_relation,
    minimal_relation,
    new_relation,
    union_rel,
)
from .decision import (
    ComparisonTable,
    DecisionReport,
    RankingResult,
    ReducedTable,
    ScoreVector,
    comparison_table,
    final_scores,
    rank,
    reduce,
    score,
)
from .io import (
    gifss_from_dict,
    gifss_to_dict,
    load_gifss,
    load_relation,
    relation_from_dict,
    relation_to_dict,
    save_gifss,
    save_relation,
)
from .tables import (
    Table,
    comparison_matrix_table,
    emit_table,
    final_score_table,
    reduced_value_table,
    score_vector_table,
)

__version__ = "0.1.0"

__all__ = [
    "Degree", "ZERO", "ONE", "get_precision", "set_precision", "precision",
    "ulp",
    "GifssError", "DegreeError", "ValidityError", "UniverseMismatchError",
    "NormPairError", "CoverageError", "ContainmentError",
    "ParentMismatchError", "ChainMismatchError", "DatasetError",
    "DatasetParseError",
    "NormPair", "PRODUCT", "MINMAX", "LUKASIEWICZ", "pair_names",
    "pair_from_name", "builtin_pairs", "register_pair", "tnorm", "tconorm",
    "tnorm_raw", "tconorm_raw",
    "Universe", "IfsValue", "IfSet", "Gifss", "equals", "is_subset",
    "union", "intersect", "ifs_union", "ifs_intersect",
    "Gifsr", "new_relation", "maximal_relation", "minimal_relation",
    "union_rel", "intersect_rel", "inverse", "is_subrelation", "compose",
    "compose_at",
    "ReducedTable", "ComparisonTable", "ScoreVector", "RankingResult",
    "DecisionReport", "reduce", "comparison_table", "score", "final_scores",
    "rank",
    "load_gifss", "save_gifss", "load_relation", "save_relation",
    "gifss_from_dict", "gifss_to_dict", "relation_from_dict",
    "relation_to_dict",
    "Table", "emit_table", "reduced_value_table", "comparison_matrix_table",
    "score_vector_table", "final_score_table",
]
