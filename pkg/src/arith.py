"""
Number-theoretic primitives for the intermediate curves X_Delta(N).

Subgroups Delta with {+-1} <= Delta <= (Z/NZ)* are stored as full sorted
residue tuples, so equality is tuple equality and membership is a lookup.

Usage:
    from src.arith import closure, enumerate_subgroups

    delta = closure(21, [8])          # SubgroupDelta(21, (1, 8, 13, 20))
    for sub in enumerate_subgroups(13):
        print(sub.label)              # {±1}, {±1,±5}, {±1,±3,±4}, ...

Conventions for N = 1 and N = 2: the unit group is {1}, and +1 and -1 coincide.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Iterator

import sympy

from .utils.config import resolve_level_ceiling

logger = logging.getLogger(__name__)


class ArithError(ValueError):
    """Input outside the domain of an arithmetic primitive."""


class LevelMismatchError(ValueError):
    """A subgroup of one level was used where another level was expected."""


# ── Scalar functions ─────────────────────────────────────────────────────────

def euler_phi(n: int) -> int:
    """Euler's totient via sympy's factorisation.  phi(1) = 1."""
    if n < 1:
        raise ArithError(f"euler_phi needs n >= 1, got {n}")
    return int(sympy.totient(n))


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    if n < 1:
        raise ArithError(f"divisors needs n >= 1, got {n}")
    return [int(d) for d in sympy.divisors(n)]


def prime_factors(n: int) -> list[int]:
    if n < 1:
        raise ArithError(f"prime_factors needs n >= 1, got {n}")
    return [int(p) for p in sympy.primefactors(n)]


def check_level(level: int, ceiling: int | str | None = "auto") -> int:
    """Reject levels below 1 or above the configured ceiling; return the level."""
    if level < 1:
        raise ArithError(f"level must be >= 1, got {level}")
    limit = resolve_level_ceiling(ceiling)
    if level > limit:
        raise ArithError(
            f"level {level} exceeds the ceiling {limit} "
            f"(raise it with --ceiling or XDELTA_LEVEL_CEILING)"
        )
    return level


def _require_positive(level: int) -> None:
    # Single subgroups are cheap; only enumeration and the CLI enforce the ceiling.
    if level < 1:
        raise ArithError(f"level must be >= 1, got {level}")


def _reduce(residue: int, level: int) -> int:
    # Mod 1 every integer is the unit class, written 1.
    return 1 if level == 1 else residue % level


# ── Groups ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class UnitGroup:
    """(Z/NZ)* as its sorted list of residues."""
    level: int
    residues: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class SubgroupDelta:
    """
    A subgroup {+-1} <= Delta <= (Z/NZ)*.

    Instances built by closure() and enumerate_subgroups() are canonical:
    `residues` is sorted and complete.  Use validate() on hand-built values.
    """
    level: int
    residues: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.residues)

    def __contains__(self, residue: object) -> bool:
        if not isinstance(residue, int):
            return False
        return _reduce(residue, self.level) in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.residues)

    def __len__(self) -> int:
        return len(self.residues)

    @property
    def _members(self) -> frozenset[int]:
        return frozenset(self.residues)

    @property
    def representatives(self) -> tuple[int, ...]:
        """One residue from each pair {r, -r}, the smaller one."""
        return tuple(r for r in self.residues if r <= self.level - r or self.level <= 2)

    @property
    def label(self) -> str:
        """Printed label such as {±1,±8}."""
        if self.level <= 2:
            return "{1}"
        return "{" + ",".join(f"±{r}" for r in self.representatives) + "}"

    @property
    def is_trivial(self) -> bool:
        """True for {+-1}, the subgroup of X_1(N)."""
        return self.order == (1 if self.level <= 2 else 2)

    @property
    def is_full(self) -> bool:
        """True for the whole unit group, the subgroup of X_0(N)."""
        return self.order == euler_phi(self.level)

    def require_level(self, level: int) -> None:
        if self.level != level:
            raise LevelMismatchError(
                f"subgroup {self.label} has level {self.level}, expected {level}"
            )

    def validate(self) -> "SubgroupDelta":
        """Check every subgroup invariant; return self."""
        n = self.level
        if list(self.residues) != sorted(set(self.residues)):
            raise ArithError(f"residues of {self.residues} are not strictly increasing")
        for r in self.residues:
            if n > 1 and not (1 <= r < n):
                raise ArithError(f"residue {r} is outside [1, {n})")
            if gcd(r, n) != 1:
                raise ArithError(f"residue {r} is not a unit mod {n}")
        members = self._members
        if 1 not in members or _reduce(n - 1, n) not in members:
            raise ArithError(f"{self.residues} does not contain +-1 mod {n}")
        for a in self.residues:
            for b in self.residues:
                if _reduce(a * b, n) not in members:
                    raise ArithError(f"{self.residues} is not closed: {a}*{b} mod {n}")
        if euler_phi(n) % self.order:
            raise ArithError(f"order {self.order} does not divide phi({n})")
        return self


@dataclass(frozen=True)
class ProjectedImage:
    """pi_d(Delta): the reduction of Delta modulo lcm(d, N/d)."""
    divisor: int
    modulus: int
    residues: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.residues)


def unit_group(level: int) -> UnitGroup:
    _require_positive(level)
    if level <= 2:
        return UnitGroup(level, (1,))
    return UnitGroup(level, tuple(r for r in range(1, level) if gcd(r, level) == 1))


def closure(level: int, generators: Iterable[int]) -> SubgroupDelta:
    """
    Smallest subgroup of (Z/NZ)* containing the generators and +-1.

    Raises ArithError naming the first generator that is not a unit mod N.
    """
    _require_positive(level)
    gens: set[int] = set()
    for g in generators:
        if gcd(g, level) != 1:
            raise ArithError(f"generator {g} is not coprime to {level}")
        gens.add(_reduce(g, level))
    if level <= 2:
        return SubgroupDelta(level, (1,))

    gens.add(level - 1)
    elements = {1}
    frontier = [1]
    while frontier:
        grown: list[int] = []
        for x in frontier:
            for g in gens:
                y = x * g % level
                if y not in elements:
                    elements.add(y)
                    grown.append(y)
        frontier = grown
    return SubgroupDelta(level, tuple(sorted(elements)))


def _join(sub: SubgroupDelta, unit: int) -> SubgroupDelta:
    """<sub, unit> as the union of the cosets sub * unit^k."""
    n = sub.level
    members = sub._members
    powers = [1]
    power = unit % n
    while power not in members:
        powers.append(power)
        power = power * unit % n
    elements = {h * p % n for h in sub.residues for p in powers}
    return SubgroupDelta(n, tuple(sorted(elements)))


def enumerate_subgroups(level: int, ceiling: int | str | None = "auto") -> list[SubgroupDelta]:
    """
    Every subgroup {+-1} <= Delta <= (Z/NZ)*, sorted by (order, residues).

    Grows the lattice upward from {+-1} by joining one unit at a time;
    results are deduplicated on their residue tuples.
    """
    check_level(level, ceiling)
    base = closure(level, [])
    if level <= 2:
        return [base]

    units = [u for u in unit_group(level).residues if u <= level - u]
    seen: dict[tuple[int, ...], SubgroupDelta] = {base.residues: base}
    queue = [base]
    while queue:
        sub = queue.pop()
        members = sub._members
        for u in units:
            if u in members:
                continue
            bigger = _join(sub, u)
            if bigger.residues not in seen:
                seen[bigger.residues] = bigger
                queue.append(bigger)

    result = sorted(seen.values(), key=lambda s: (s.order, s.residues))
    logger.debug("level %d: %d subgroups containing +-1", level, len(result))
    return result


def is_subgroup(small: SubgroupDelta, big: SubgroupDelta) -> bool:
    if small.level != big.level:
        return False
    return small._members <= big._members


def supergroups(delta: SubgroupDelta) -> list[SubgroupDelta]:
    """Every enumerated Delta' containing delta, delta itself included."""
    return [s for s in enumerate_subgroups(delta.level) if is_subgroup(delta, s)]


def project_pi_d(delta: SubgroupDelta, d: int) -> ProjectedImage:
    """Image of delta under reduction modulo lcm(d, N/d)."""
    n = delta.level
    if d < 1 or n % d:
        raise ArithError(f"{d} does not divide {n}")
    modulus = lcm(d, n // d)
    if modulus <= 2:
        return ProjectedImage(d, modulus, (1,))
    image = sorted({r % modulus for r in delta.residues})
    return ProjectedImage(d, modulus, tuple(image))


_SPEC_SPLIT = re.compile(r"[,\s]+")


def parse_delta_spec(level: int, spec: str | Iterable[int] | None) -> SubgroupDelta:
    """
    Resolve a user Delta spec ("8", "1,8,13,20", "5 7", "" or a list) to its closure.
    """
    if spec is None:
        return closure(level, [])
    if isinstance(spec, str):
        tokens = [t for t in _SPEC_SPLIT.split(spec.strip()) if t]
        try:
            generators = [int(t) for t in tokens]
        except ValueError:
            raise ArithError(f"delta spec must list integers, got {spec!r}") from None
    else:
        generators = list(spec)
    return closure(level, generators)
