"""Entrywise-squared coordinates and their membership residuals."""

from fractions import Fraction

import numpy as np
import pytest

from grasskit import (SquaredPlucker, plucker_from_basis, sgr2_residual,
                      sgr4_quartic, sgr_degree, square_plucker)
from grasskit.errors import DomainError, WrongDimension, ZeroVector
from grasskit.linalg import det
from grasskit.plucker import d_subsets

BASIS = np.array([[1, 0, 1, 2], [0, 1, 3, 4]])
# squares of the minors (1, 3, 4, -1, -2, -2), normalized to total 35
SQUARES = {(1, 2): Fraction(1, 35), (1, 3): Fraction(9, 35),
           (1, 4): Fraction(16, 35), (2, 3): Fraction(1, 35),
           (2, 4): Fraction(4, 35), (3, 4): Fraction(4, 35)}


def test_square_plucker_frozen():
    q = square_plucker(plucker_from_basis(BASIS))
    assert q.exact
    assert dict(q.items()) == SQUARES
    assert sum(q.vector()) == 1


def test_constructor_normalizes_and_validates():
    q = SquaredPlucker(2, 4, dict.fromkeys(d_subsets(4, 2), 3))
    assert all(v == Fraction(1, 6) for _, v in q.items())
    bad = dict.fromkeys(d_subsets(4, 2), 1)
    bad[(1, 2)] = -1
    with pytest.raises(DomainError):
        SquaredPlucker(2, 4, bad)
    with pytest.raises(ZeroVector):
        SquaredPlucker(2, 4, dict.fromkeys(d_subsets(4, 2), 0))


def test_matrix_form_is_symmetric_with_zero_diagonal():
    q = square_plucker(plucker_from_basis(BASIS))
    mat = q.matrix_form()
    assert mat.shape == (4, 4)
    for i in range(4):
        assert mat[i, i] == 0
        for j in range(4):
            assert mat[i, j] == mat[j, i]
    assert mat[0, 3] == SQUARES[(1, 4)]


def test_matrix_form_needs_two_rows():
    line = SquaredPlucker(1, 3, {(1,): 1, (2,): 1, (3,): 2})
    with pytest.raises(WrongDimension):
        line.matrix_form()


@pytest.mark.parametrize("seed,n", [(0, 4), (1, 5), (2, 6), (3, 7)])
def test_sgr2_residual_zero_on_squared_planes(seed, n):
    rng = np.random.default_rng(seed)
    basis = rng.integers(-5, 6, size=(2, n))
    while np.linalg.matrix_rank(basis.astype(float)) < 2:
        basis = rng.integers(-5, 6, size=(2, n))
    q = square_plucker(plucker_from_basis(basis))
    assert sgr2_residual(q) == 0


def test_sgr2_residual_on_planted_nonmember():
    coords = dict.fromkeys(d_subsets(4, 2), 0)
    coords[(1, 2)] = 1
    coords[(3, 4)] = 1
    q = SquaredPlucker(2, 4, coords)
    assert sgr2_residual(q) == Fraction(1, 16)


def test_sgr2_residual_dimension_rules():
    with pytest.raises(WrongDimension):
        sgr2_residual(SquaredPlucker(1, 3, {(1,): 1, (2,): 1, (3,): 1}))
    small = SquaredPlucker(2, 3, dict.fromkeys(d_subsets(3, 2), 1))
    assert sgr2_residual(small) == 0    # no 4x4 minors exist below n=4


@pytest.mark.parametrize("seed", range(10))
def test_sgr4_quartic_equals_determinant(seed):
    rng = np.random.default_rng(200 + seed)
    raw = {s: Fraction(int(k), 64) for s, k in
           zip(d_subsets(4, 2), rng.integers(1, 65, size=6))}
    q = SquaredPlucker(2, 4, raw)
    assert sgr4_quartic(q) == det(q.matrix_form())


def test_sgr4_quartic_frozen_value():
    coords = dict.fromkeys(d_subsets(4, 2), 0)
    coords[(1, 2)] = 1
    coords[(3, 4)] = 1
    assert sgr4_quartic(SquaredPlucker(2, 4, coords)) == Fraction(1, 16)


def test_sgr4_quartic_wrong_shape():
    with pytest.raises(WrongDimension):
        sgr4_quartic(SquaredPlucker(2, 5, dict.fromkeys(d_subsets(5, 2), 1)))


def test_sgr_degree_reference_values():
    assert sgr_degree(2, 4) == 4
    assert sgr_degree(2, 5) == 20
    assert sgr_degree(3, 6) == 672


def catalan(k):
    from math import comb
    return comb(2 * k, k) // (k + 1)


@pytest.mark.parametrize("n", range(4, 13))
def test_sgr_degree_matches_catalan_form_for_planes(n):
    assert sgr_degree(2, n) == 2 ** (n - 3) * catalan(n - 2)


@pytest.mark.parametrize("d,n", [(2, 6), (3, 7), (2, 12), (4, 8), (3, 9)])
def test_sgr_degree_is_a_positive_integer(d, n):
    value = sgr_degree(d, n)
    assert isinstance(value, int) and value > 0
