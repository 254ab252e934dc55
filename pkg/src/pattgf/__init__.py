"""Exact generating functions and brute-force oracles for 132-avoiding
permutations that avoid, or contain exactly once, one extra pattern."""

from .algebra import (
    BivariateSeries,
    Polynomial,
    PowerSeries,
    RationalFunction,
    exact_divide_by_var,
    series_of,
    series_sqrt,
)
from .chebyshev import chebyshev_u, check_identity, r_func, sweep_identities, v_poly
from .engine import (
    avoid_gf,
    avoid_gf_closed,
    compute_gf,
    once_gf,
    phi_closed_series,
    psi_closed_series,
)
from .errors import (
    EnumerationCapExceeded,
    NotIn132Class,
    PatternError,
    UnsupportedPattern,
)
from .oracle import ConstraintSpec, CountTable, catalan, count, enumerate_avoiders, series
from .patterns import (
    CanonicalDecomposition,
    FamilySpec,
    canonical_decompose,
    classify,
    flatten,
    format_pattern,
    is_wedge,
    iter_wedges,
    occurrence_count,
    parse_pattern,
    prefix_pattern,
    suffix_pattern,
)
from .relations import RelationReport, verify_relation

__version__ = "0.1.0"

__all__ = [
    "BivariateSeries",
    "CanonicalDecomposition",
    "ConstraintSpec",
    "CountTable",
    "EnumerationCapExceeded",
    "FamilySpec",
    "NotIn132Class",
    "PatternError",
    "Polynomial",
    "PowerSeries",
    "RationalFunction",
    "RelationReport",
    "UnsupportedPattern",
    "avoid_gf",
    "avoid_gf_closed",
    "canonical_decompose",
    "catalan",
    "chebyshev_u",
    "check_identity",
    "classify",
    "compute_gf",
    "count",
    "enumerate_avoiders",
    "exact_divide_by_var",
    "flatten",
    "format_pattern",
    "is_wedge",
    "iter_wedges",
    "occurrence_count",
    "once_gf",
    "parse_pattern",
    "phi_closed_series",
    "prefix_pattern",
    "psi_closed_series",
    "r_func",
    "series",
    "series_of",
    "series_sqrt",
    "suffix_pattern",
    "sweep_identities",
    "v_poly",
    "verify_relation",
]
