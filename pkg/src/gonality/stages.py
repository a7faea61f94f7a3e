"""
The built-in classification stages, in pipeline order:

    genus-rule  ->  abramovich  ->  covering  ->  canonical-ideal  ->  paper-asserted

For genus >= 3, sub-hyperelliptic and hyperelliptic coincide, and a
hyperelliptic curve is not trigonal.
"""
from __future__ import annotations

import logging

from ..canonical import CanonicalError, hyperelliptic_test, petri_test, quadratic_relations
from .base import ClassificationContext, ClassificationStage, Provenance
from .bound import gonality_upper_bound
from .tables import candidate_levels, table_levels

logger = logging.getLogger(__name__)

# The one hyperelliptic curve of genus >= 2 strictly between X_1(N) and X_0(N).
HYPERELLIPTIC_INTERMEDIATE = (21, (1, 8, 13, 20))


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


class GenusRuleStage(ClassificationStage):
    name = "genus-rule"
    display_name = "Genus rule"

    def apply(self, context: ClassificationContext) -> None:
        g = context.invariants.genus
        verdict = context.verdict
        if g <= 1:
            verdict.decide(self.name, "computed", f"genus {g} <= 1: gonality <= 2, not hyperelliptic",
                           sub_hyperelliptic="yes", hyperelliptic="no", trigonal="yes")
        elif g == 2:
            verdict.decide(self.name, "computed", "genus 2: every genus-2 curve is hyperelliptic",
                           sub_hyperelliptic="yes", hyperelliptic="yes", trigonal="yes")


class AbramovichStage(ClassificationStage):
    name = "abramovich"
    display_name = "Abramovich bound"

    def apply(self, context: ClassificationContext) -> None:
        bound = context.bound
        verdict = context.verdict
        if bound.gonality_lower_bound <= 2:
            return
        detail = f"mu = {bound.mu}: 119*mu > 12000*{bound.gonality_lower_bound - 1}, gonality >= {bound.gonality_lower_bound}"
        values = {"sub_hyperelliptic": "no", "hyperelliptic": "no"}
        if bound.gonality_lower_bound > 3:
            values["trigonal"] = "no"
        verdict.decide(self.name, "computed", detail, **values)


class CoveringStage(ClassificationStage):
    """
    Gonality cannot grow along a covering, so X_Delta(N) is at least as
    gonal as X_0(N); a degree-k covering of a genus-0 curve gives gonality <= k.
    """
    name = "covering"
    display_name = "Covering argument"

    def apply(self, context: ClassificationContext) -> None:
        inv = context.invariants
        verdict = context.verdict
        n, g = inv.level, inv.genus

        upper = gonality_upper_bound(n, inv.delta)
        if upper is not None:
            if upper <= 2 and g >= 2:
                verdict.decide(self.name, "computed",
                               f"degree-{upper} covering of a genus-0 curve",
                               sub_hyperelliptic="yes", hyperelliptic="yes")
            if upper == 3 or g <= 2:
                verdict.decide(self.name, "computed",
                               f"degree-{upper} covering of a genus-0 curve",
                               trigonal="yes")

        # Which X_0(N) have gonality <= 2 or <= 3 is a published classification.
        if n not in candidate_levels(2):
            verdict.decide(self.name, "paper-asserted",
                           f"X_0({n}) is not sub-hyperelliptic, so neither is X_Delta({n})",
                           sub_hyperelliptic="no", hyperelliptic="no")
        if n not in candidate_levels(3):
            verdict.decide(self.name, "paper-asserted",
                           f"X_0({n}) has gonality > 3, so X_Delta({n}) is not trigonal",
                           trigonal="no")


class CanonicalIdealStage(ClassificationStage):
    name = "canonical-ideal"
    display_name = "Canonical ideal"

    def apply(self, context: ClassificationContext) -> None:
        basis = context.basis
        verdict = context.verdict
        if basis is None or basis.genus < 3:
            return
        g = basis.genus
        quadrics = quadratic_relations(basis)
        grade = "probe" if quadrics.heuristic else "certified"
        if quadrics.underdetermined:
            verdict.note("quadric-count", "computed",
                         f"{quadrics.dimension} quadrics at precision {basis.precision} "
                         f"({grade}, underdetermined: not used)")
            return

        shape = hyperelliptic_test(g, quadrics.dimension)
        detail = f"r2 = {quadrics.dimension} at precision {basis.precision} ({grade}): {shape}"
        if shape == "hyperelliptic":
            verdict.decide("quadric-count", "computed", detail,
                           sub_hyperelliptic="yes", hyperelliptic="yes", trigonal="no")
            return
        if shape == "inconsistent":
            verdict.note("quadric-count", "computed", detail)
            return

        verdict.decide("quadric-count", "computed", detail,
                       sub_hyperelliptic="no", hyperelliptic="no")
        if g in (3, 4):
            verdict.decide("quadric-count", "computed",
                           f"non-hyperelliptic of genus {g} is trigonal", trigonal="yes")
            return

        try:
            report = petri_test(basis)
        except CanonicalError as exc:
            verdict.note("petri", "computed", f"not run: {exc}")
            return
        detail = (f"dim L' = {report.dim_L_prime}, r3 = {report.r3_expected}, "
                  f"cubic generators = {report.cubic_generators} ({grade})")
        if report.verdict == "not_trigonal":
            verdict.decide("petri", "computed", detail, trigonal="no")
        elif report.verdict == "trigonal_or_plane_quintic" and not report.plane_quintic_possible:
            verdict.decide("petri", "computed", detail, trigonal="yes")
        else:
            verdict.note("petri", "computed", f"{detail}: {report.verdict}")


class PublishedVerdictStage(ClassificationStage):
    """
    Published verdicts for everything the earlier stages left open.

    Hyperelliptic, genus >= 3:
        strictly intermediate Delta -> only Delta_1(21)
        full group (X_0(N))         -> exactly the levels in table2.tsv
        {±1} (X_1(N))               -> never
    Trigonal: genus <= 2, or genus 3, 4 and not hyperelliptic.
    """
    name = "paper-asserted"
    display_name = "Published classification"

    def apply(self, context: ClassificationContext) -> None:
        inv = context.invariants
        verdict = context.verdict
        n, g, delta = inv.level, inv.genus, inv.delta

        if g >= 3 and verdict.hyperelliptic == "unknown":
            if delta.is_full:
                hyp = n in table_levels(2)
                reason = f"X_0({n}) is hyperelliptic of genus >= 3 iff N is listed in table2.tsv"
            elif delta.is_trivial:
                hyp = False
                reason = "no X_1(N) of genus >= 3 is hyperelliptic"
            else:
                hyp = (n, delta.residues) == HYPERELLIPTIC_INTERMEDIATE
                reason = "X_{±1,±8}(21) is the only hyperelliptic intermediate curve"
            verdict.decide(self.name, "paper-asserted", reason,
                           sub_hyperelliptic=_yes_no(hyp), hyperelliptic=_yes_no(hyp))

        if verdict.trigonal != "unknown":
            return
        if g >= 5:
            verdict.decide(self.name, "paper-asserted",
                           f"no X_Delta(N) of genus {g} >= 5 is trigonal", trigonal="no")
        elif g in (3, 4) and verdict.hyperelliptic != "unknown":
            # Inherits the provenance of the hyperelliptic verdict it rests on.
            provenance: Provenance = verdict.provenance_of("hyperelliptic") or "paper-asserted"
            trig = verdict.hyperelliptic == "no"
            verdict.decide(self.name if provenance == "paper-asserted" else "genus-rule",
                           provenance,
                           f"genus {g}: trigonal iff not hyperelliptic",
                           trigonal=_yes_no(trig))
