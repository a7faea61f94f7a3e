"""
Evidence-tag registry.

Each entry gives the user-facing label and a one-line description for a kind
of fact that can appear in a ClassificationVerdict's evidence chain.  Stages
refer to tags by id; reports look the label up here so every stage's facts
render the same way.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvidenceTag:
    """User-facing definition of one kind of evidence."""
    id: str
    label: str
    description: str


# ── Registry ──────────────────────────────────────────────────────────────────
#
# Keys are the ids that stages pass to ClassificationVerdict.decide()/note().

TAGS: dict[str, EvidenceTag] = {

    # ── Pure arithmetic ───────────────────────────────────────────────────────
    "genus-rule": EvidenceTag(
        id="genus-rule",
        label="Genus rule",
        description="Curves of genus <= 2 are sub-hyperelliptic and trigonal; "
                    "genus 2 curves are hyperelliptic",
    ),
    "abramovich": EvidenceTag(
        id="abramovich",
        label="Abramovich bound",
        description="Gon(X) > 119*mu/12000, from lambda_1 > 0.238",
    ),
    "covering": EvidenceTag(
        id="covering",
        label="Covering argument",
        description="Gonality moves along X_Delta(N) -> X_Delta'(N) -> X_0(N)",
    ),

    # ── Canonical ideal ───────────────────────────────────────────────────────
    "quadric-count": EvidenceTag(
        id="quadric-count",
        label="Quadric count",
        description="Dimension of the degree-2 part of the canonical ideal",
    ),
    "petri": EvidenceTag(
        id="petri",
        label="Petri count",
        description="Cubic generators needed beyond span{x_i Q_j}",
    ),

    # ── Published classifications ─────────────────────────────────────────────
    "paper-asserted": EvidenceTag(
        id="paper-asserted",
        label="Published classification",
        description="Verdict taken from the published classification, "
                    "not recomputed here",
    ),
}


def resolve(tag_id: str) -> EvidenceTag | None:
    """Return the EvidenceTag for tag_id, or None if unknown."""
    return TAGS.get(tag_id)


def label(tag_id: str) -> str:
    tag = resolve(tag_id)
    return tag.label if tag else tag_id
