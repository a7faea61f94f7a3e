"""
Canonical-map tests on a basis f_1..f_g of weight-2 cusp forms.

The canonical map sends the curve to P^(g-1).  A degree-k polynomial in
x_1..x_g vanishes on the image exactly when it vanishes on the forms, so the
degree-2 and degree-3 parts of the canonical ideal are kernels of
coefficient matrices built from the products f_i f_j and f_i f_j f_k.

  * quadric count r2 = (g-1)(g-2)/2  -> hyperelliptic (image is a rational normal curve)
  * quadric count r2 = (g-2)(g-3)/2  -> not hyperelliptic
  * cubic generators needed beyond span{x_i Q_j} -> trigonal or a plane quintic

Precision.  A weight-k form on a group of index mu that vanishes past order
k*mu/12 is zero, so certify mode insists on P >= ceil(mu/3)+1 for quadrics
(weight 4) and P >= ceil(mu/2)+1 for cubics (weight 6).  Probe mode runs at
any usable precision and marks every result heuristic.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import reduce
from math import ceil
from typing import Literal, Sequence

import sympy

from .arith import SubgroupDelta
from .modcurve import genus as curve_genus
from .qlinalg import (
    Monomial,
    QSeries,
    RationalMatrix,
    RelationBasis,
    linear_combination,
    monomials,
    rank,
    relation_kernel,
    series_mul,
)
from .utils.config import Mode

logger = logging.getLogger(__name__)

HyperellipticResult = Literal["hyperelliptic", "not_hyperelliptic", "inconsistent"]
PetriVerdict = Literal["trigonal_or_plane_quintic", "not_trigonal", "indeterminate"]

# Series precision below which a degree-k product carries no equation at all.
_MIN_PRECISION = {2: 2, 3: 3}


class CanonicalError(ValueError):
    """Basis or request outside what the canonical tests accept."""


class InsufficientPrecisionError(CanonicalError):
    def __init__(self, degree: int, precision: int, required: int, mode: Mode):
        self.degree = degree
        self.precision = precision
        self.required = required
        super().__init__(
            f"degree-{degree} relations in {mode} mode need precision >= {required}, "
            f"the basis has {precision}"
        )


def sturm_precision(mu: int, degree: int) -> int:
    """Coefficients needed to certify degree-2 (weight 4) or degree-3 (weight 6) relations."""
    if degree == 2:
        return ceil(Fraction(mu, 3)) + 1
    if degree == 3:
        return ceil(Fraction(mu, 2)) + 1
    raise CanonicalError(f"only degrees 2 and 3 are supported, got {degree}")


@dataclass(frozen=True)
class CanonicalBasis:
    """g cusp forms of X_Delta(N) at a common precision."""
    level: int
    delta: SubgroupDelta
    genus: int
    mu: int
    forms: tuple[QSeries, ...]
    mode: Mode = "probe"

    @classmethod
    def build(
        cls,
        level: int,
        delta: SubgroupDelta,
        forms: Sequence[QSeries],
        mode: Mode = "probe",
    ) -> "CanonicalBasis":
        delta.require_level(level)
        inv = curve_genus(level, delta)
        if len(forms) != inv.genus:
            raise CanonicalError(
                f"X_{delta.label}({level}) has genus {inv.genus}, got {len(forms)} forms"
            )
        if inv.genus < 3:
            raise CanonicalError(f"canonical tests need genus >= 3, X_{delta.label}({level}) has {inv.genus}")
        precisions = {f.precision for f in forms}
        if len(precisions) != 1:
            raise CanonicalError(f"forms have mixed precisions {sorted(precisions)}")
        for i, f in enumerate(forms, start=1):
            if f.coefficients[0] != 0:
                raise CanonicalError(f"f{i} has constant term {f.coefficients[0]}; cusp forms need 0")
        if mode not in ("certify", "probe"):
            raise CanonicalError(f"mode must be 'certify' or 'probe', got {mode!r}")
        return cls(level, delta, inv.genus, inv.mu, tuple(forms), mode)

    @property
    def precision(self) -> int:
        return self.forms[0].precision

    def require_precision(self, degree: int) -> None:
        minimum = _MIN_PRECISION[degree]
        if self.mode == "certify":
            minimum = max(minimum, sturm_precision(self.mu, degree))
        if self.precision < minimum:
            raise InsufficientPrecisionError(degree, self.precision, minimum, self.mode)

    def certified(self, degree: int) -> bool:
        return self.precision >= sturm_precision(self.mu, degree)

    def product(self, monomial: Monomial) -> QSeries:
        return reduce(series_mul, (self.forms[i] for i in monomial))

    def change_basis(self, matrix: Sequence[Sequence]) -> "CanonicalBasis":
        """Forms f'_i = sum_j matrix[i][j] f_j (the caller keeps matrix invertible)."""
        new_forms = tuple(linear_combination(row, self.forms) for row in matrix)
        return replace(self, forms=new_forms)


def _relations(basis: CanonicalBasis, degree: int) -> RelationBasis:
    basis.require_precision(degree)
    order = monomials(basis.genus, degree)
    result = relation_kernel([basis.product(m) for m in order], order)
    heuristic = basis.mode == "probe" and not basis.certified(degree)
    if heuristic:
        logger.warning(
            "X_%s(%d): degree-%d relations at precision %d are heuristic (certify needs %d)",
            basis.delta.label, basis.level, degree, basis.precision,
            sturm_precision(basis.mu, degree),
        )
    if result.underdetermined:
        logger.warning(
            "X_%s(%d): %d equations for %d degree-%d monomials; the kernel is underdetermined",
            basis.delta.label, basis.level, result.informative_rows, len(order), degree,
        )
    return replace(result, heuristic=heuristic)


def quadratic_relations(basis: CanonicalBasis) -> RelationBasis:
    """Degree-2 part of the canonical ideal: relations among the f_i f_j, i <= j."""
    return _relations(basis, 2)


def cubic_relations(basis: CanonicalBasis) -> RelationBasis:
    """Degree-3 part of the canonical ideal: relations among the f_i f_j f_k."""
    return _relations(basis, 3)


def hyperelliptic_test(g: int, r2: int) -> HyperellipticResult:
    if g < 3 or r2 < 0:
        raise CanonicalError(f"hyperelliptic_test needs g >= 3 and r2 >= 0, got ({g}, {r2})")
    if r2 == (g - 1) * (g - 2) // 2:
        return "hyperelliptic"
    if r2 == (g - 2) * (g - 3) // 2:
        return "not_hyperelliptic"
    return "inconsistent"


def expected_cubic_relations(g: int) -> int:
    """Dimension of the degree-3 part of the canonical ideal of a non-hyperelliptic curve."""
    return (g - 3) * (g * g + 6 * g - 10) // 6


@dataclass(frozen=True)
class PetriReport:
    genus: int
    r2: int
    r3_expected: int
    r3_observed: int | None
    dim_L_prime: int
    cubic_generators: int
    verdict: PetriVerdict
    heuristic: bool = False

    @property
    def plane_quintic_possible(self) -> bool:
        """A positive cubic count at genus 6 may also mean a smooth plane quintic."""
        return self.genus == 6 and self.cubic_generators > 0


def _as_poly(vector: Sequence, order: Sequence[Monomial], symbols) -> sympy.Poly:
    expr = sympy.Add(*(
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*(symbols[i] for i in m))
        for c, m in zip(map(Fraction, vector), order) if c
    ))
    return sympy.Poly(expr, *symbols, domain=sympy.QQ)


def _coefficients(poly: sympy.Poly, index: dict[Monomial, int]) -> list:
    row = [0] * len(index)
    for exponents, coeff in poly.terms():
        if coeff == 0:
            continue
        row[index[tuple(i for i, e in enumerate(exponents) for _ in range(e))]] = coeff
    return row


def petri_from_quadrics(
    g: int,
    quadrics: Sequence[Sequence],
    r3_observed: int | None = None,
    heuristic: bool = False,
) -> PetriReport:
    """
    Count the cubic generators the canonical ideal needs beyond the quadrics.

    `quadrics` are coefficient vectors over monomials(g, 2).  dim L' is the
    rank of all x_i * Q_j written over monomials(g, 3); only polynomial
    algebra is involved.
    """
    if g < 5:
        raise CanonicalError(f"the Petri count applies to genus >= 5, got {g}")
    order2 = monomials(g, 2)
    index3 = {m: k for k, m in enumerate(monomials(g, 3))}
    symbols = sympy.symbols(f"x1:{g + 1}")
    linear = [sympy.Poly(x, *symbols, domain=sympy.QQ) for x in symbols]
    products = []
    for q in quadrics:
        if len(q) != len(order2):
            raise CanonicalError(f"quadric has {len(q)} coefficients, expected {len(order2)}")
        poly = _as_poly(q, order2, symbols)
        products += [_coefficients(poly * x, index3) for x in linear]
    dim_l = rank(RationalMatrix.from_rows(products, len(index3))) if products else 0
    r3_expected = expected_cubic_relations(g)
    cubic = r3_expected - dim_l
    if cubic < 0:
        raise CanonicalError(
            f"x_i*Q_j span {dim_l} cubics, more than the {r3_expected} a canonical curve allows"
        )
    if r3_observed is not None and r3_observed != r3_expected:
        verdict: PetriVerdict = "indeterminate"
    elif cubic == 0:
        verdict = "not_trigonal"
    else:
        verdict = "trigonal_or_plane_quintic"
    return PetriReport(
        genus=g,
        r2=len(quadrics),
        r3_expected=r3_expected,
        r3_observed=r3_observed,
        dim_L_prime=dim_l,
        cubic_generators=cubic,
        verdict=verdict,
        heuristic=heuristic,
    )


def petri_test(basis: CanonicalBasis) -> PetriReport:
    """Petri count from the basis: quadrics from series, dim L' by polynomial algebra."""
    g = basis.genus
    if g < 5:
        raise CanonicalError(f"the Petri count applies to genus >= 5, got {g}")
    quadrics = quadratic_relations(basis)
    shape = hyperelliptic_test(g, quadrics.dimension)
    if quadrics.underdetermined or shape != "not_hyperelliptic":
        raise CanonicalError(
            f"Petri needs a non-hyperelliptic quadric count {(g - 2) * (g - 3) // 2}, "
            f"got {quadrics.dimension} ({'underdetermined' if quadrics.underdetermined else shape})"
        )

    r3_observed = None
    cubic_rows = basis.precision - 2
    if basis.precision >= 3 and cubic_rows >= len(monomials(g, 3)) and (
        basis.mode == "probe" or basis.certified(3)
    ):
        r3_observed = cubic_relations(basis).dimension

    report = petri_from_quadrics(g, quadrics.vectors, r3_observed, heuristic=quadrics.heuristic)
    logger.debug("Petri for X_%s(%d): %s", basis.delta.label, basis.level, report)
    return report


def verify_relation(
    basis: CanonicalBasis,
    coefficients: Sequence,
    order: Sequence[Monomial] | None = None,
) -> bool:
    """True iff sum c_m * f^m is zero to the basis precision."""
    if order is None:
        g = basis.genus
        for degree in (2, 3):
            if len(coefficients) == len(monomials(g, degree)):
                order = monomials(g, degree)
                break
        else:
            raise CanonicalError(
                f"{len(coefficients)} coefficients match no monomial order in {g} variables"
            )
    if len(coefficients) != len(order):
        raise CanonicalError(f"{len(coefficients)} coefficients for {len(order)} monomials")
    if any(i >= basis.genus for m in order for i in m):
        raise CanonicalError(f"monomial order uses variables beyond x{basis.genus}")
    value = linear_combination(coefficients, [basis.product(m) for m in order])
    return value.is_zero()
