"""
classify(): run the stage pipeline on one curve.

Usage:
    from src.arith import closure
    from src.gonality import classify

    verdict = classify(37, closure(37, [6]))
    verdict.trigonal            # "no"  (Abramovich bound)
"""
from __future__ import annotations

import logging

from ..arith import LevelMismatchError, SubgroupDelta
from ..canonical import CanonicalBasis, CanonicalError
from ..modcurve import genus
from .base import ClassificationContext, ClassificationVerdict, PROPERTIES
from .bound import abramovich_bound
from .registry import pipeline

logger = logging.getLogger(__name__)


class ClassificationError(RuntimeError):
    """The pipeline produced a verdict that breaks its own invariants (a bug)."""


def _check_forms(level: int, delta: SubgroupDelta, basis: CanonicalBasis, g: int) -> None:
    if basis.level != level or basis.delta != delta:
        raise LevelMismatchError(
            f"forms are for X_{basis.delta.label}({basis.level}), not X_{delta.label}({level})"
        )
    if len(basis.forms) != g:
        raise CanonicalError(f"X_{delta.label}({level}) has genus {g}, got {len(basis.forms)} forms")


def _check_verdict(verdict: ClassificationVerdict, lower_bound: int) -> None:
    if verdict.hyperelliptic == "yes" and (verdict.genus < 2 or verdict.sub_hyperelliptic != "yes"):
        raise ClassificationError(f"hyperelliptic verdict inconsistent for X_{verdict.delta.label}({verdict.level})")
    if verdict.trigonal == "yes" and lower_bound > 3:
        raise ClassificationError(f"trigonal verdict contradicts gonality >= {lower_bound}")
    for prop in PROPERTIES:
        if verdict.get(prop) != "unknown" and verdict.provenance_of(prop) is None:
            raise ClassificationError(f"{prop} decided without evidence")


def classify(
    level: int,
    delta: SubgroupDelta,
    forms: CanonicalBasis | None = None,
    stages: list[str] | None = None,
) -> ClassificationVerdict:
    """
    Sub-hyperelliptic / hyperelliptic / trigonal verdicts for X_Delta(N).

    Args:
        level:   N.
        delta:   the subgroup, at level N.
        forms:   optional cusp-form basis of X_Delta(N); enables the
                 canonical-ideal stage.
        stages:  restrict to these registered stage names (default: all).

    Returns:
        A ClassificationVerdict whose evidence lists each fact, in stage order.
    """
    delta.require_level(level)
    inv = genus(level, delta)
    if forms is not None:
        _check_forms(level, delta, forms, inv.genus)

    bound = abramovich_bound(inv.mu)
    verdict = ClassificationVerdict(level=level, delta=delta, genus=inv.genus, mu=inv.mu)
    context = ClassificationContext(invariants=inv, bound=bound, verdict=verdict, basis=forms)
    for stage in pipeline(stages):
        stage.apply(context)
        logger.debug("after %s: sub=%s hyp=%s trig=%s", stage.name,
                     verdict.sub_hyperelliptic, verdict.hyperelliptic, verdict.trigonal)

    _check_verdict(verdict, bound.gonality_lower_bound)
    return verdict
