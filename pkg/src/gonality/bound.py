"""
Gonality bounds for X_Delta(N): Abramovich's lower bound, and an upper
bound from coverings of genus-0 curves.

With lambda_1 > 0.238 the bound lambda_1 * mu <= 24 * Gon(X) reads

    mu < (12000/119) * Gon(X),

so a curve of index mu has Gon(X) > 119*mu/12000.  All comparisons are on
integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith import SubgroupDelta, closure, supergroups, unit_group
from ..modcurve import covering_degree, genus

LAMBDA_1 = Fraction(238, 1000)       # documentation only; folded into the constant below
ABRAMOVICH_CONSTANT = Fraction(12000, 119)

_NUM = ABRAMOVICH_CONSTANT.denominator    # 119
_DEN = ABRAMOVICH_CONSTANT.numerator      # 12000


@dataclass(frozen=True)
class GonalityBound:
    mu: int
    gonality_lower_bound: int

    def rules_out(self, d: int) -> bool:
        return rules_out_gonality(self.mu, d)


def abramovich_bound(mu: int) -> GonalityBound:
    """floor(119*mu/12000) + 1."""
    if mu < 1:
        raise ValueError(f"index mu must be >= 1, got {mu}")
    return GonalityBound(mu=mu, gonality_lower_bound=_NUM * mu // _DEN + 1)


def rules_out_gonality(mu: int, d: int) -> bool:
    """True iff 119*mu > 12000*d, i.e. the curve cannot be d-gonal."""
    if mu < 1 or d < 1:
        raise ValueError(f"need mu >= 1 and d >= 1, got ({mu}, {d})")
    return _NUM * mu > _DEN * d


def gonality_upper_bound(level: int, delta: SubgroupDelta) -> int | None:
    """
    Least degree of a covering X_Delta(N) -> X_Delta'(N) onto a genus-0 curve,
    Delta <= Delta' (Delta' = Delta gives 1).  None when no such curve exists.
    """
    delta.require_level(level)
    # Genus only drops along coverings, so a genus-0 curve above X_Delta(N)
    # exists only if X_0(N) itself has genus 0.
    if genus(level, closure(level, unit_group(level).residues)).genus > 0:
        return None
    degrees = [
        covering_degree(delta, sup)
        for sup in supergroups(delta)
        if genus(level, sup).genus == 0
    ]
    return min(degrees) if degrees else None
