"""Dyck path peak statistics, the peak-deletion bijection, exact Narayana
counting, and uniform sampling by peak count."""

from .bijection import (
    InsertionPlan,
    ReduceResult,
    expand,
    fiber,
    joint_distribution,
    plan_of,
    reduce,
)
from .compositions import (
    composition_count,
    compositions,
    rank_composition,
    unrank_composition,
)
from .counting import (
    IdentityReport,
    binomial,
    catalan,
    kreweras_lhs,
    kreweras_rhs,
    narayana,
    refined_count,
    refined_lhs,
    refined_rhs,
)
from .errors import (
    CapExceeded,
    DipsBelowZero,
    EmptyRange,
    EmptySupport,
    IllegalCharacter,
    InexactDivision,
    InvalidPlan,
    OrdinalOutOfRange,
    PathError,
    PeakDeficit,
    Unbalanced,
)
from .paths import (
    DEFAULT_ENUMERATION_CAP,
    EMPTY_PATH_TOKEN,
    DyckPath,
    PathStats,
    PlateauSpan,
    Step,
    enumerate_paths,
    enumerate_paths_with_peaks,
    parse_path,
    peak_plateaus,
    peaks,
    rank_by_peaks,
    render_path,
    stats,
    unrank_by_peaks,
)
from .sampling import sample_uniform
from .verify import Failure, VerificationSummary, verify_bijection, verify_identity

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "DEFAULT_ENUMERATION_CAP",
    "DipsBelowZero",
    "DyckPath",
    "EMPTY_PATH_TOKEN",
    "EmptyRange",
    "EmptySupport",
    "Failure",
    "IdentityReport",
    "IllegalCharacter",
    "InexactDivision",
    "InsertionPlan",
    "InvalidPlan",
    "OrdinalOutOfRange",
    "PathError",
    "PathStats",
    "PeakDeficit",
    "PlateauSpan",
    "ReduceResult",
    "Step",
    "Unbalanced",
    "VerificationSummary",
    "binomial",
    "catalan",
    "composition_count",
    "compositions",
    "enumerate_paths",
    "enumerate_paths_with_peaks",
    "expand",
    "fiber",
    "joint_distribution",
    "kreweras_lhs",
    "kreweras_rhs",
    "narayana",
    "parse_path",
    "peak_plateaus",
    "peaks",
    "plan_of",
    "rank_by_peaks",
    "rank_composition",
    "reduce",
    "refined_count",
    "refined_lhs",
    "refined_rhs",
    "render_path",
    "sample_uniform",
    "stats",
    "unrank_by_peaks",
    "unrank_composition",
    "verify_bijection",
    "verify_identity",
]
