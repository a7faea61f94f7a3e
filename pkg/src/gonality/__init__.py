"""
Gonality of X_Delta(N): bounds, embedded tables and the classification pipeline.
"""
from .base import ClassificationVerdict, Evidence
from .bound import GonalityBound, abramovich_bound, gonality_upper_bound, rules_out_gonality
from .classify import classify
from .tables import (
    ReproducedRow,
    TableRow,
    candidate_levels,
    enumeration_coverage,
    load_table,
    reproduce_table,
)

__all__ = [
    "ClassificationVerdict",
    "Evidence",
    "GonalityBound",
    "ReproducedRow",
    "TableRow",
    "abramovich_bound",
    "candidate_levels",
    "classify",
    "enumeration_coverage",
    "gonality_upper_bound",
    "load_table",
    "reproduce_table",
    "rules_out_gonality",
]
