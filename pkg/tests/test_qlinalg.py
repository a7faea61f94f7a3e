import random
from fractions import Fraction

import pytest

from src.qlinalg import (
    QLinAlgError,
    QSeries,
    RationalMatrix,
    clear_denominators,
    format_polynomial,
    kernel,
    linear_combination,
    monomials,
    rank,
    relation_kernel,
    row_echelon_basis,
    series_mul,
)


def test_series_product_truncates_to_the_shorter_operand():
    a = QSeries.of([0, 1, -1, 1, -1, -2, -1, -1, 3, 1, 2])
    square = series_mul(a, a)
    assert square.coefficients == tuple(Fraction(x) for x in [0, 0, 1, -2, 3, -4, -1, 0, -3, 10, 0])
    short = series_mul(a, QSeries.of([1, 1, 0]))
    assert short.precision == 2
    assert short.coefficients == (0, 1, 0)


def test_series_arithmetic():
    a = QSeries.of([0, 1, Fraction(1, 2)])
    b = QSeries.of([0, 0, 1, 5])
    assert (a + b).coefficients == (0, 1, Fraction(3, 2))
    assert (a - a).is_zero()
    assert a.valuation == 1 and b.valuation == 2
    assert b.truncate(1).coefficients == (0, 0)
    with pytest.raises(QLinAlgError):
        a.truncate(5)
    assert linear_combination([2, -1], [a, b]).coefficients == (0, 2, 0)
    with pytest.raises(QLinAlgError):
        QSeries(())


def test_rank_and_kernel_of_a_small_matrix():
    m = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.shape == (3, 3)
    assert rank(m) == 2
    basis = kernel(m)
    assert basis == ((Fraction(1), Fraction(1), Fraction(-1)),)
    assert m.apply(basis[0]) == (0, 0, 0)


def test_kernel_is_echelon_and_independent_of_row_order():
    rows = [[1, 0, -1, 2], [0, 1, 1, Fraction(1, 3)]]
    assert kernel(RationalMatrix.from_rows(rows)) == kernel(RationalMatrix.from_rows(rows[::-1]))


def test_ragged_rows_are_rejected():
    with pytest.raises(QLinAlgError):
        RationalMatrix.from_rows([[1, 2], [3]])


def test_random_kernels_satisfy_rank_nullity_and_resubstitution():
    rng = random.Random(20240611)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 8)
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(ncols)] for _ in range(nrows)]
        # Plant a dependent row now and then.
        if nrows > 1 and rng.random() < 0.5:
            rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1])]
        m = RationalMatrix.from_rows(rows)
        basis = kernel(m)
        assert rank(m) + len(basis) == ncols
        for v in basis:
            assert all(x == 0 for x in m.apply(v))
        assert row_echelon_basis(basis, ncols) == basis


def test_monomial_order():
    assert monomials(3, 2) == ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
    assert len(monomials(5, 2)) == 15
    assert len(monomials(5, 3)) == 35


def test_clear_denominators_and_formatting():
    assert clear_denominators([Fraction(-1, 2), 0, Fraction(3, 4)]) == (2, 0, -3)
    assert clear_denominators([0, 0]) == (0, 0)
    order = monomials(3, 2)
    assert format_polynomial((1, 0, 0, -1, 1, -1), order) == "x1^2 - x2^2 + x2*x3 - x3^2"
    assert format_polynomial((0, 2, 0, 0, 0, Fraction(-1, 2)), order) == "2*x1*x2 - 1/2*x3^2"
    assert format_polynomial((0,) * 6, order) == "0"


def test_relation_kernel_records_how_many_rows_carry_information():
    f = [QSeries.of([0, 1, 0, 0]), QSeries.of([0, 0, 1, 0])]
    order = monomials(2, 2)
    products = [series_mul(f[i], f[j]) for i, j in order]
    result = relation_kernel(products, order)
    assert result.precision == 3
    assert result.informative_rows == 2
    assert result.underdetermined
    assert result.degree == 2


def test_relation_kernel_errors():
    order = monomials(2, 2)
    with pytest.raises(QLinAlgError):
        relation_kernel([], order)
    with pytest.raises(QLinAlgError):
        relation_kernel([QSeries.of([0, 1])], order)
    with pytest.raises(QLinAlgError):
        relation_kernel([QSeries.of([0])] * 3, order)


def test_echelon_basis_ignores_order_and_scaling_of_the_input():
    rng = random.Random(31)
    for _ in range(25):
        ncols = rng.randint(2, 7)
        vectors = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(ncols)]
                   for _ in range(rng.randint(1, 5))]
        reference = row_echelon_basis(vectors, ncols)
        shuffled = [[Fraction(rng.choice([-3, -1, 2, 7])) * x for x in v] for v in vectors]
        rng.shuffle(shuffled)
        assert row_echelon_basis(shuffled, ncols) == reference

        m = RationalMatrix.from_rows(vectors, ncols)
        assert kernel(RationalMatrix.from_rows(shuffled, ncols)) == kernel(m)


def test_kernel_of_an_empty_system_is_everything():
    assert kernel(RationalMatrix((), 2)) == ((1, 0), (0, 1))


def test_random_series_have_no_quadratic_relations_once_rows_suffice():
    rng = random.Random(99)
    for g in (3, 4, 5):
        order = monomials(g, 2)
        precision = len(order) + 6
        forms = [QSeries.of([0] + [rng.randint(-9, 9) for _ in range(precision)]) for _ in range(g)]
        result = relation_kernel([series_mul(forms[i], forms[j]) for i, j in order], order)
        assert not result.underdetermined
        assert result.dimension == 0
