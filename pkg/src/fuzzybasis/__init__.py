"""Exact classification of piecewise-linear fuzzy families and the
Łukasiewicz theories they induce."""

from .basis import (Classification, ClassificationDisagreement, PathCoverage, canonical_basis,
                    classify, injectivity_check, path_coverage, refine)
from .plfun import DomainError, Op, PLFunc, combine, evaluate, global_max, global_min, negate, pl_equal
from .props import FuzzyFamily, PropertyReport, Verdict, property_report

__version__ = "0.1.0"

__all__ = [
    "Classification", "ClassificationDisagreement", "PathCoverage", "canonical_basis",
    "classify", "injectivity_check", "path_coverage", "refine", "DomainError", "Op", "PLFunc",
    "combine", "evaluate", "global_max", "global_min", "negate", "pl_equal", "FuzzyFamily",
    "PropertyReport", "Verdict", "property_report",
]
