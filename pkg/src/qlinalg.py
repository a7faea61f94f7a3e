"""
Truncated q-series with exact rational coefficients, and the exact linear
algebra used to find polynomial relations among them.

A QSeries of precision P holds a_0..a_P and is known modulo q^(P+1).
Products are truncated to the smaller precision of the two operands; the
extra term that two cusp forms (a_0 = 0) would justify is left unused.

Kernels come from sympy's exact nullspace, put in reduced echelon form.  Rows are
scaled to integers first, which keeps the null space and lets sympy
eliminate over ZZ.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import Iterable, Sequence

import sympy
from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul
from sympy.polys.rings import ring

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]      # sorted 0-based variable indices, (0, 2) = x1*x3

_SERIES_RING, _Q = ring("q", QQ)


class QLinAlgError(ValueError):
    """Malformed series, matrices or relation systems."""


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


# ── Series ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class QSeries:
    """a_0 + a_1 q + ... + a_P q^P + O(q^(P+1))."""
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise QLinAlgError("a q-series needs at least the constant coefficient")

    @classmethod
    def of(cls, coefficients: Iterable) -> "QSeries":
        return cls(tuple(_fraction(c) for c in coefficients))

    @property
    def precision(self) -> int:
        return len(self.coefficients) - 1

    @property
    def valuation(self) -> int | None:
        """Index of the first non-zero coefficient, None for O(q^(P+1))."""
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        return None

    def __getitem__(self, index: int) -> Fraction:
        return self.coefficients[index]

    def truncate(self, precision: int) -> "QSeries":
        if precision > self.precision:
            raise QLinAlgError(f"cannot extend precision {self.precision} to {precision}")
        return QSeries(self.coefficients[:precision + 1])

    def __add__(self, other: "QSeries") -> "QSeries":
        p = min(self.precision, other.precision)
        return QSeries(tuple(a + b for a, b in zip(self.coefficients[:p + 1], other.coefficients)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scale(-1)

    def scale(self, factor) -> "QSeries":
        factor = _fraction(factor)
        return QSeries(tuple(factor * c for c in self.coefficients))

    def __mul__(self, other: "QSeries") -> "QSeries":
        return series_mul(self, other)

    def is_zero(self) -> bool:
        return self.valuation is None


def _to_ring(series: QSeries):
    return _SERIES_RING.from_dict({
        (i,): QQ(c.numerator, c.denominator)
        for i, c in enumerate(series.coefficients) if c
    })


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated to precision min(P_a, P_b)."""
    precision = min(a.precision, b.precision)
    product = rs_mul(_to_ring(a), _to_ring(b), _Q, precision + 1)
    coefficients = [Fraction(0)] * (precision + 1)
    for (exponent,), value in product.items():
        coefficients[exponent] = _fraction(QQ.to_sympy(value))
    return QSeries(tuple(coefficients))


def linear_combination(weights: Sequence, series: Sequence[QSeries]) -> QSeries:
    """sum_i weights[i] * series[i] at the common precision."""
    if len(weights) != len(series) or not series:
        raise QLinAlgError("need one weight per series and at least one series")
    precision = min(s.precision for s in series)
    total = [Fraction(0)] * (precision + 1)
    for w, s in zip(weights, series):
        w = _fraction(w)
        if not w:
            continue
        for i in range(precision + 1):
            total[i] += w * s.coefficients[i]
    return QSeries(tuple(total))


# ── Matrices ─────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "RationalMatrix":
        converted = tuple(tuple(_fraction(x) for x in row) for row in rows)
        width = ncols if ncols is not None else (len(converted[0]) if converted else 0)
        for i, row in enumerate(converted):
            if len(row) != width:
                raise QLinAlgError(f"row {i} has {len(row)} entries, expected {width}")
        return cls(converted, width)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        """M @ v."""
        if len(vector) != self.ncols:
            raise QLinAlgError(f"vector of length {len(vector)} for {self.ncols} columns")
        v = [_fraction(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows)

    def to_sympy(self) -> sympy.Matrix:
        """Integer sympy matrix with the same row space (each row scaled by its denominators)."""
        int_rows = []
        for row in self.rows:
            scale = reduce(lcm, (x.denominator for x in row), 1)
            int_rows.append([int(x * scale) for x in row])
        return sympy.Matrix(self.nrows, self.ncols, lambda i, j: int_rows[i][j])


def _rref(matrix: RationalMatrix) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    if matrix.nrows == 0 or matrix.ncols == 0:
        return [], ()
    reduced, pivots = matrix.to_sympy().rref()
    rows = [[_fraction(reduced[i, j]) for j in range(matrix.ncols)] for i in range(len(pivots))]
    return rows, tuple(pivots)


def rank(matrix: RationalMatrix) -> int:
    return len(_rref(matrix)[1])


def row_echelon_basis(vectors: Sequence[Sequence], ncols: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced echelon basis of the span of `vectors`; pivots are 1, rows sorted by pivot."""
    if not vectors:
        return ()
    rows, _ = _rref(RationalMatrix.from_rows(vectors, ncols))
    return tuple(tuple(row) for row in rows)


def kernel(matrix: RationalMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """
    Reduced echelon basis of the right null space of `matrix`.

    sympy's nullspace is stacked and reduced once more, so the result depends
    only on the null space.
    """
    n = matrix.ncols
    if n == 0:
        return ()
    if matrix.nrows == 0:
        return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    spanning = [list(v) for v in matrix.to_sympy().nullspace()]
    basis = row_echelon_basis(spanning, n)
    r = rank(matrix)
    if len(basis) + r != n:
        raise QLinAlgError(f"rank-nullity fails: {r} + {len(basis)} != {n}")
    return basis


# ── Relations ────────────────────────────────────────────────────────────────

def monomials(g: int, degree: int) -> tuple[Monomial, ...]:
    """Degree-`degree` monomials in x1..xg, graded lexicographic with x1 > x2 > ..."""
    return tuple(combinations_with_replacement(range(g), degree))


def format_monomial(monomial: Monomial) -> str:
    parts = []
    for i in sorted(set(monomial)):
        power = monomial.count(i)
        parts.append(f"x{i + 1}" + (f"^{power}" if power > 1 else ""))
    return "*".join(parts)


def format_polynomial(coefficients: Sequence, order: Sequence[Monomial]) -> str:
    """'x1^2 - x2^2 + x2*x3 - x3^2' style rendering; zero terms are skipped."""
    text = ""
    for c, m in zip(coefficients, order):
        c = _fraction(c)
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        term = format_monomial(m) if magnitude == 1 else f"{magnitude}*{format_monomial(m)}"
        if not text:
            text = term if sign == "+" else f"-{term}"
        else:
            text += f" {sign} {term}"
    return text or "0"


def clear_denominators(vector: Sequence) -> tuple[int, ...]:
    """Scale to coprime integers with a positive leading coefficient."""
    fractions = [_fraction(x) for x in vector]
    scale = reduce(lcm, (x.denominator for x in fractions), 1)
    ints = [int(x * scale) for x in fractions]
    content = reduce(gcd, ints, 0)
    if content == 0:
        return tuple(ints)
    lead = next(x for x in ints if x)
    if lead < 0:
        content = -content
    return tuple(x // content for x in ints)


@dataclass(frozen=True)
class RelationBasis:
    """Reduced echelon basis of the linear relations among monomials in the forms."""
    monomial_order: tuple[Monomial, ...]
    vectors: tuple[tuple[Fraction, ...], ...]
    precision: int
    informative_rows: int     # exponents degree..P that can carry an equation
    heuristic: bool = False   # computed below the certify precision

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @property
    def degree(self) -> int:
        return len(self.monomial_order[0]) if self.monomial_order else 0

    @property
    def underdetermined(self) -> bool:
        """Fewer equations than monomials: the kernel is forced, not measured."""
        return self.informative_rows < len(self.monomial_order)

    def integer_vectors(self) -> list[tuple[int, ...]]:
        return [clear_denominators(v) for v in self.vectors]

    def polynomials(self) -> list[str]:
        return [format_polynomial(v, self.monomial_order) for v in self.integer_vectors()]


def relation_kernel(
    products: Sequence[QSeries],
    monomial_order: Sequence[Monomial],
) -> RelationBasis:
    """
    Kernel of the (P+1) x (#monomials) coefficient matrix whose columns are
    the products, one per monomial.
    """
    if not products:
        raise QLinAlgError("relation_kernel needs at least one product")
    if len(products) != len(monomial_order):
        raise QLinAlgError(f"{len(products)} products for {len(monomial_order)} monomials")
    precision = min(p.precision for p in products)
    if precision < 1:
        raise QLinAlgError(f"products need precision >= 1, got {precision}")
    columns = [p.coefficients[:precision + 1] for p in products]
    matrix = RationalMatrix.from_rows(
        ([col[i] for col in columns] for i in range(precision + 1)),
        ncols=len(columns),
    )
    degree = len(monomial_order[0])
    basis = RelationBasis(
        monomial_order=tuple(monomial_order),
        vectors=kernel(matrix),
        precision=precision,
        informative_rows=max(0, precision - degree + 1),
    )
    logger.debug("relation kernel: %dx%d matrix, dimension %d",
                 matrix.nrows, matrix.ncols, basis.dimension)
    return basis
