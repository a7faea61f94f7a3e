"""
Genus of X_Delta(N):

    g = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2

with mu the index of Gamma_Delta(N)/{+-1} in PSL_2(Z), nu2 and nu3 the
elliptic points of order 2 and 3, and nu_inf the cusps, counted divisor by
divisor together with the ramification of the coverings

    X_Delta(N) --p1--> X_0(N) --p--> X(1)

at each cusp.  Everything is exact; the genus is never a float.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import SubgroupDelta, divisors, euler_phi, is_subgroup, prime_factors, project_pi_d

logger = logging.getLogger(__name__)


class ModularCurveError(RuntimeError):
    """An identity of the genus formula failed.  Always a bug, never bad input."""


@dataclass(frozen=True)
class CuspOrbitData:
    """Cusps of X_Delta(N) lying over the divisor d, with ramification indices."""
    divisor: int
    orbit_count: int      # phi(d) phi(N/d) / |pi_d(Delta)|
    e_total: int          # (N/d, d): ramification of X_0(N) -> X(1)
    e_p1: int             # |Delta| / |pi_d(Delta)|
    e_p2: int             # e_total / e_p1
    image_order: int      # |pi_d(Delta)|


@dataclass(frozen=True)
class CurveInvariants:
    level: int
    delta: SubgroupDelta
    mu: int
    nu2: int
    nu3: int
    nu_inf: int
    genus: int

    @property
    def degree_over_x0(self) -> int:
        return euler_phi(self.level) // self.delta.order


def _degree_over_x0(n: int, delta: SubgroupDelta) -> int:
    delta.require_level(n)
    return euler_phi(n) // delta.order


def index_mu(n: int, delta: SubgroupDelta) -> int:
    """N * prod_{p | N} (1 + 1/p) * phi(N) / |Delta|."""
    mu0 = n
    for p in prime_factors(n):
        mu0 = mu0 // p * (p + 1)
    return mu0 * _degree_over_x0(n, delta)


def _count_roots(n: int, delta: SubgroupDelta, poly) -> int:
    return sum(1 for b in delta.residues if poly(b) % n == 0)


def nu2(n: int, delta: SubgroupDelta) -> int:
    """Elliptic points of order 2: #{b in Delta : b^2 + 1 = 0 mod N} * phi(N)/|Delta|."""
    return _count_roots(n, delta, lambda b: b * b + 1) * _degree_over_x0(n, delta)


def nu3(n: int, delta: SubgroupDelta) -> int:
    """Elliptic points of order 3: #{b in Delta : b^2 - b + 1 = 0 mod N} * phi(N)/|Delta|."""
    return _count_roots(n, delta, lambda b: b * b - b + 1) * _degree_over_x0(n, delta)


def cusp_orbits(n: int, delta: SubgroupDelta) -> list[CuspOrbitData]:
    """One CuspOrbitData per divisor d of N, in increasing d."""
    deg_p2 = _degree_over_x0(n, delta)
    orbits: list[CuspOrbitData] = []
    for d in divisors(n):
        image = project_pi_d(delta, d)
        count, rest = divmod(euler_phi(d) * euler_phi(n // d), image.order)
        if rest or count < 1:
            raise ModularCurveError(
                f"cusp count over d={d} is not a positive integer for {delta.label} mod {n}"
            )
        e_total = gcd(n // d, d)
        e_p1, rest = divmod(delta.order, image.order)
        if rest:
            raise ModularCurveError(f"|pi_{d}| = {image.order} does not divide |Delta| = {delta.order}")
        e_p2 = Fraction(e_total * image.order, delta.order)
        if e_p2.denominator != 1 or e_total % e_p2.numerator:
            raise ModularCurveError(f"e_p2 = {e_p2} over d={d} does not divide {e_total}")
        # Cusps over d: deg(p2)/e_p2 points above each of the phi((d, N/d)) cusps of X_0(N).
        if Fraction(deg_p2) / e_p2 * euler_phi(e_total) != count:
            raise ModularCurveError(f"cusp orbit identity fails over d={d} for {delta.label} mod {n}")
        orbits.append(CuspOrbitData(
            divisor=d,
            orbit_count=count,
            e_total=e_total,
            e_p1=e_p1,
            e_p2=int(e_p2),
            image_order=image.order,
        ))
    return orbits


def nu_inf(n: int, delta: SubgroupDelta) -> int:
    return sum(orbit.orbit_count for orbit in cusp_orbits(n, delta))


def genus(n: int, delta: SubgroupDelta) -> CurveInvariants:
    """Evaluate the genus formula and check that the result is a non-negative integer."""
    delta.require_level(n)
    mu = index_mu(n, delta)
    v2 = nu2(n, delta)
    v3 = nu3(n, delta)
    vinf = nu_inf(n, delta)
    g = 1 + Fraction(mu, 12) - Fraction(v2, 4) - Fraction(v3, 3) - Fraction(vinf, 2)
    if g.denominator != 1 or g < 0:
        raise ModularCurveError(
            f"genus formula gives {g} for {delta.label} mod {n} "
            f"(mu={mu}, nu2={v2}, nu3={v3}, nu_inf={vinf})"
        )
    g = int(g)
    if 12 * (g - 1) + 3 * v2 + 4 * v3 + 6 * vinf != mu:
        raise ModularCurveError(f"Riemann-Hurwitz check fails for {delta.label} mod {n}")
    logger.debug("X_%s(%d): mu=%d nu2=%d nu3=%d nu_inf=%d g=%d",
                 delta.label, n, mu, v2, v3, vinf, g)
    return CurveInvariants(level=n, delta=delta, mu=mu, nu2=v2, nu3=v3, nu_inf=vinf, genus=g)


def covering_degree(delta: SubgroupDelta, delta_prime: SubgroupDelta) -> int:
    """Degree of X_Delta(N) -> X_Delta'(N) for Delta <= Delta'."""
    if not is_subgroup(delta, delta_prime):
        raise ValueError(f"{delta.label} is not contained in {delta_prime.label} mod {delta.level}")
    return delta_prime.order // delta.order
