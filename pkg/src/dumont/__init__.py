"""Enumeration and verification for pattern-restricted Dumont permutations."""
from .catalog import CATALOG, FormulaId, formula, statistic_gf
from .enumeration import (
    KINDS,
    CountTable,
    FamilySpec,
    count_family,
    count_table,
    enumerate_family,
    family,
    joint_distribution,
)
from .patterns import VincularPattern, avoids, contains_exactly, occurrences, parse_pattern
from .perm import (
    Permutation,
    descents,
    is_dumont_first,
    is_dumont_second,
    new_permutation,
    rises,
    rlm,
    statistic,
)
from .series import TruncatedSeries, catalan_series, q_recurrence, series_arith, sqrt_series
from .verify import REGISTRY, VerificationReport, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "FormulaId",
    "formula",
    "statistic_gf",
    "KINDS",
    "CountTable",
    "FamilySpec",
    "count_family",
    "count_table",
    "enumerate_family",
    "family",
    "joint_distribution",
    "VincularPattern",
    "avoids",
    "contains_exactly",
    "occurrences",
    "parse_pattern",
    "Permutation",
    "descents",
    "is_dumont_first",
    "is_dumont_second",
    "new_permutation",
    "rises",
    "rlm",
    "statistic",
    "TruncatedSeries",
    "catalan_series",
    "q_recurrence",
    "series_arith",
    "sqrt_series",
    "REGISTRY",
    "VerificationReport",
    "run_all",
    "run_check",
]
