"""
Abstract base for classification stages, and the verdict they fill in.

To add a stage:
  1. Implement ClassificationStage in src/gonality/stages.py.
  2. Register it in src/gonality/registry.py with register(MyStage).
  Stages run in registration order; classify() picks them up automatically.

A stage may only turn an "unknown" field into "yes" or "no".  Once a field
is decided, later stages (and later evidence such as a forms file) cannot
change it; a disagreeing stage is logged and ignored.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Literal

if TYPE_CHECKING:
    from ..arith import SubgroupDelta
    from ..canonical import CanonicalBasis
    from ..modcurve import CurveInvariants
    from .bound import GonalityBound

logger = logging.getLogger(__name__)

Verdict = Literal["yes", "no", "unknown"]
Provenance = Literal["computed", "paper-asserted"]
Property = Literal["sub_hyperelliptic", "hyperelliptic", "trigonal"]

PROPERTIES: tuple[Property, ...] = ("sub_hyperelliptic", "hyperelliptic", "trigonal")


@dataclass(frozen=True)
class Evidence:
    """One fact in the evidence chain."""
    tag: str                           # key into tags.TAGS  e.g. "genus-rule", "abramovich"
    provenance: Provenance
    detail: str                        # human-readable statement of the fact
    decides: tuple[tuple[Property, Verdict], ...] = ()   # fields this fact settled; empty for notes


@dataclass
class ClassificationVerdict:
    level: int
    delta: "SubgroupDelta"
    genus: int
    mu: int
    sub_hyperelliptic: Verdict = "unknown"
    hyperelliptic: Verdict = "unknown"
    trigonal: Verdict = "unknown"
    evidence: list[Evidence] = field(default_factory=list)

    def get(self, prop: Property) -> Verdict:
        return getattr(self, prop)

    def decide(
        self,
        tag: str,
        provenance: Provenance,
        detail: str,
        **values: Verdict,
    ) -> bool:
        """
        Set every still-unknown field in `values`; record one evidence fact for
        the fields actually set.  Returns True if anything changed.
        """
        settled: list[tuple[Property, Verdict]] = []
        for prop, value in values.items():
            if prop not in PROPERTIES:
                raise KeyError(f"Unknown property '{prop}'. Available: {list(PROPERTIES)}")
            current = self.get(prop)
            if current == "unknown":
                setattr(self, prop, value)
                settled.append((prop, value))
            elif current != value:
                logger.warning(
                    "X_%s(%d): %s says %s=%s but it is already %s; keeping %s",
                    self.delta.label, self.level, tag, prop, value, current, current,
                )
        if settled:
            self.evidence.append(Evidence(tag, provenance, detail, tuple(settled)))
        return bool(settled)

    def note(self, tag: str, provenance: Provenance, detail: str) -> None:
        self.evidence.append(Evidence(tag, provenance, detail))

    def provenance_of(self, prop: Property) -> Provenance | None:
        """Provenance of the fact that decided `prop`, None while unknown."""
        for fact in self.evidence:
            if any(p == prop for p, _ in fact.decides):
                return fact.provenance
        return None

    @property
    def resolved(self) -> bool:
        return all(self.get(p) != "unknown" for p in PROPERTIES)


@dataclass
class ClassificationContext:
    """Everything a stage may look at while classifying one curve."""
    invariants: "CurveInvariants"
    bound: "GonalityBound"
    verdict: ClassificationVerdict
    basis: "CanonicalBasis | None" = None


class ClassificationStage(ABC):
    """
    One step of the classification pipeline.

    Lifecycle per classify() call:
        stage.apply(context)     <- reads context, calls context.verdict.decide()/note()
    """

    # Class-level constants, overridden in each subclass
    name: str = ""           # unique slug  e.g. "genus-rule"
    display_name: str = ""   # shown in reports e.g. "Genus rule"

    @abstractmethod
    def apply(self, context: ClassificationContext) -> None:
        ...
