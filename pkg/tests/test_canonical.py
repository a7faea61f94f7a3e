import random
from fractions import Fraction

import pytest

from src.arith import closure
from src.canonical import (
    CanonicalBasis,
    CanonicalError,
    InsufficientPrecisionError,
    cubic_relations,
    expected_cubic_relations,
    hyperelliptic_test,
    petri_from_quadrics,
    petri_test,
    quadratic_relations,
    sturm_precision,
    verify_relation,
)
from src.qlinalg import QSeries, monomials

# Quadrics through the canonical image of X_{±1,±11}(30), in x1..x5.
QUADRICS_30 = [
    {(3, 3): 1, (4, 4): -1, (0, 2): -1, (1, 2): 2, (3, 4): -4},
    {(2, 2): 1, (4, 4): -2, (0, 1): 2, (0, 2): -1, (1, 2): 2, (3, 4): -4},
    {(0, 0): 1, (1, 1): 4, (4, 4): -2, (0, 1): 2, (0, 2): -1, (1, 2): 2, (3, 4): -4},
]


def _vector(g, terms):
    return [terms.get(m, 0) for m in monomials(g, 2)]


def test_sturm_precision():
    assert sturm_precision(96, 2) == 33
    assert sturm_precision(96, 3) == 49
    assert sturm_precision(192, 2) == 65
    with pytest.raises(CanonicalError):
        sturm_precision(96, 4)


def test_hyperelliptic_test_thresholds():
    assert hyperelliptic_test(3, 1) == "hyperelliptic"
    assert hyperelliptic_test(3, 0) == "not_hyperelliptic"
    assert hyperelliptic_test(5, 6) == "hyperelliptic"
    assert hyperelliptic_test(5, 3) == "not_hyperelliptic"
    assert hyperelliptic_test(5, 4) == "inconsistent"
    with pytest.raises(CanonicalError):
        hyperelliptic_test(2, 0)


def test_expected_cubic_relations():
    assert expected_cubic_relations(5) == 15
    assert expected_cubic_relations(6) == 31


def test_x_delta1_21_has_one_quadric(basis21):
    relations = quadratic_relations(basis21)
    assert relations.dimension == 1
    assert not relations.underdetermined
    assert relations.heuristic
    assert relations.integer_vectors() == [(1, 0, 0, -1, 1, -1)]
    assert relations.polynomials() == ["x1^2 - x2^2 + x2*x3 - x3^2"]
    assert verify_relation(basis21, relations.vectors[0])
    assert hyperelliptic_test(3, relations.dimension) == "hyperelliptic"


def test_x_delta1_30_quadrics_vanish_but_the_system_is_underdetermined(basis30):
    for terms in QUADRICS_30:
        assert verify_relation(basis30, _vector(5, terms))
    assert not verify_relation(basis30, _vector(5, {(0, 0): 1}))
    relations = quadratic_relations(basis30)
    assert relations.underdetermined
    assert relations.dimension >= 6


def test_relation_dimension_is_invariant_under_change_of_basis(basis21, basis30):
    rng = random.Random(7)
    for basis in (basis21, basis30):
        g = basis.genus
        for _ in range(3):
            # Unit upper-triangular times a permutation: always invertible.
            perm = list(range(g))
            rng.shuffle(perm)
            matrix = []
            for i in range(g):
                row = [0] * g
                for j in range(g):
                    if j > i:
                        row[perm[j]] = rng.randint(-3, 3)
                row[perm[i]] = 1
                matrix.append(row)
            changed = basis.change_basis(matrix)
            assert quadratic_relations(changed).dimension == quadratic_relations(basis).dimension


def test_certify_mode_refuses_low_precision(forms21):
    basis = forms21.to_basis("certify")
    with pytest.raises(InsufficientPrecisionError) as info:
        quadratic_relations(basis)
    assert info.value.required == 33
    assert "33" in str(info.value)


def test_cubics_need_precision_three(basis21):
    low = CanonicalBasis.build(21, basis21.delta, [f.truncate(2) for f in basis21.forms])
    with pytest.raises(InsufficientPrecisionError):
        cubic_relations(low)
    assert cubic_relations(basis21).degree == 3


def test_build_rejects_bad_bases(basis21):
    delta = basis21.delta
    forms = list(basis21.forms)
    with pytest.raises(CanonicalError, match="genus 3"):
        CanonicalBasis.build(21, delta, forms[:2])
    with pytest.raises(CanonicalError, match="mixed"):
        CanonicalBasis.build(21, delta, forms[:2] + [forms[2].truncate(5)])
    with pytest.raises(CanonicalError, match="constant term"):
        CanonicalBasis.build(21, delta, forms[:2] + [QSeries.of([1] + [0] * 10)])
    with pytest.raises(CanonicalError, match="genus >= 3"):
        CanonicalBasis.build(15, closure(15, [4]), [QSeries.of([0, 1, -1])])
    with pytest.raises(CanonicalError, match="mode"):
        CanonicalBasis.build(21, delta, forms, mode="fast")


def test_petri_on_the_x_delta1_32_quadrics(quadrics32):
    report = petri_from_quadrics(5, quadrics32.quadrics)
    assert report.r2 == 3
    assert report.r3_expected == 15
    assert report.dim_L_prime == 15
    assert report.cubic_generators == 0
    assert report.verdict == "not_trigonal"


def test_petri_detects_a_missing_cubic():
    quadrics = [
        _vector(5, {(0, 1): 1}),
        _vector(5, {(0, 2): 1}),
        _vector(5, {(3, 3): 1, (4, 4): 1}),
    ]
    report = petri_from_quadrics(5, quadrics)
    assert report.dim_L_prime == 14
    assert report.cubic_generators == 1
    assert report.verdict == "trigonal_or_plane_quintic"
    assert not report.plane_quintic_possible


def test_petri_on_a_rational_normal_scroll():
    quadrics = [
        _vector(5, {(0, 2): 1, (1, 1): -1}),
        _vector(5, {(0, 4): 1, (1, 3): -1}),
        _vector(5, {(1, 4): 1, (2, 3): -1}),
    ]
    report = petri_from_quadrics(5, quadrics)
    assert report.dim_L_prime == 13
    assert report.cubic_generators == 2


def test_petri_flags_an_observed_cubic_count_mismatch(quadrics32):
    report = petri_from_quadrics(5, quadrics32.quadrics, r3_observed=14)
    assert report.verdict == "indeterminate"


def test_petri_needs_genus_five(basis21, basis30):
    with pytest.raises(CanonicalError, match="genus >= 5"):
        petri_test(basis21)
    with pytest.raises(CanonicalError, match="underdetermined"):
        petri_test(basis30)
    with pytest.raises(CanonicalError):
        petri_from_quadrics(4, [])


def test_random_forms_of_genus_three_satisfy_no_quadric():
    rng = random.Random(5)
    delta = closure(21, [8])
    precision = sturm_precision(96, 2)
    forms = [QSeries.of([0] + [rng.randint(-9, 9) for _ in range(precision)]) for _ in range(3)]
    basis = CanonicalBasis.build(21, delta, forms, mode="certify")
    quadrics = quadratic_relations(basis)
    assert not quadrics.heuristic and not quadrics.underdetermined
    assert quadrics.dimension == 0


def _mix(rows, matrix):
    return [[sum(Fraction(c) * Fraction(r[k]) for c, r in zip(coeffs, rows)) for k in range(len(rows[0]))]
            for coeffs in matrix]


def _assert_petri_basis_invariant(quadrics, cubic):
    # Unimodular, so the span is unchanged.
    change = [[1, 2, -1], [0, 1, 3], [0, 0, 1]]
    mixed = _mix(quadrics, change)
    report = petri_from_quadrics(5, quadrics)
    assert report.cubic_generators == cubic
    assert petri_from_quadrics(5, mixed).cubic_generators == cubic
    assert petri_from_quadrics(5, mixed[::-1]).dim_L_prime == report.dim_L_prime


def test_petri_count_of_the_x_delta1_32_quadrics_survives_a_change_of_basis(quadrics32):
    _assert_petri_basis_invariant(quadrics32.quadrics, 0)


def test_petri_count_with_a_missing_cubic_survives_a_change_of_basis():
    quadrics = [_vector(5, {(0, 1): 1}), _vector(5, {(0, 2): 1}), _vector(5, {(3, 3): 1, (4, 4): 1})]
    _assert_petri_basis_invariant(quadrics, 1)
