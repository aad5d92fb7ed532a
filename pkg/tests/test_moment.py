"""Moment vectors, hypersimplex membership, and exact hull certificates."""

from fractions import Fraction

import numpy as np
import pytest

from grasskit import (MomentVector, fiber_residual, hypersimplex_contains,
                      in_convex_hull, in_matroid_polytope,
                      matroid_polytope_vertices, moment_from_projection,
                      moment_map, plucker_from_basis, projection_from_basis,
                      projection_from_plucker)
from grasskit.errors import DimensionError, DomainError
from grasskit.plucker import PluckerVector, d_subsets

BASIS = np.array([[1, 1, 0], [0, 1, 1]])


def test_moment_vector_validation():
    v = MomentVector([Fraction(2, 3), Fraction(2, 3), Fraction(2, 3)])
    assert v.d == 2 and v.n == 3 and v.exact
    with pytest.raises(DomainError):
        MomentVector([Fraction(1, 2), Fraction(1, 3)])   # sum not integral
    with pytest.raises(DomainError):
        MomentVector([Fraction(3, 2), Fraction(-1, 2)])  # leaves [0, 1]
    with pytest.raises(DimensionError):
        MomentVector([])


def test_moment_vector_float_regime():
    v = MomentVector([0.5, 0.5 + 1e-9, 1.0 - 1e-9])
    assert not v.exact and v.d == 2


def test_moment_map_equals_projector_diagonal():
    x = plucker_from_basis(BASIS)
    z = moment_map(x)
    p = projection_from_plucker(x)
    assert tuple(z) == p.diagonal()
    assert tuple(z) == (Fraction(2, 3), Fraction(2, 3), Fraction(2, 3))


def test_moment_map_is_scale_invariant():
    x = plucker_from_basis(BASIS)
    scaled = PluckerVector(2, 3, {s: 7 * v for s, v in x.items()})
    assert tuple(moment_map(scaled)) == tuple(moment_map(x))


def test_moment_from_projection():
    p = projection_from_basis(BASIS)
    assert tuple(moment_from_projection(p)) == p.diagonal()


def test_hypersimplex_contains():
    assert hypersimplex_contains([Fraction(2, 3)] * 3, 2)
    assert not hypersimplex_contains([Fraction(2, 3)] * 3, 1)
    assert not hypersimplex_contains([Fraction(3, 2), Fraction(1, 2)], 2)
    assert hypersimplex_contains([0.5, 0.5 + 1e-12, 1.0], 2)
    assert not hypersimplex_contains([0.4, 0.4, 1.0], 2)


def test_matroid_polytope_vertices_are_support_indicators():
    x = plucker_from_basis(np.array([[1, 0, 1, 2], [0, 1, 3, 4]]))
    vertices = matroid_polytope_vertices(x)
    assert vertices == {(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1),
                        (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)}


def test_matroid_polytope_vertices_track_zero_coordinates():
    coords = dict.fromkeys(d_subsets(4, 2), 0)
    coords[(1, 2)] = 1
    coords[(1, 3)] = 1
    coords[(2, 3)] = -1
    x = PluckerVector(2, 4, coords)     # a 2-plane inside span{e1,e2,e3}
    assert matroid_polytope_vertices(x) == {(1, 1, 0, 0), (1, 0, 1, 0),
                                            (0, 1, 1, 0)}


def test_in_convex_hull_triangle():
    triangle = [(0, 0), (1, 0), (0, 1)]
    assert in_convex_hull([Fraction(1, 4), Fraction(1, 4)], triangle)
    assert in_convex_hull([0, 0], triangle)
    assert not in_convex_hull([Fraction(3, 4), Fraction(3, 4)], triangle)
    assert not in_convex_hull([Fraction(-1, 10), Fraction(0)], triangle)


def test_in_convex_hull_validates_lengths():
    with pytest.raises(DimensionError):
        in_convex_hull([0, 0], [(0, 0, 0)])
    assert not in_convex_hull([0, 0], [])


def test_in_matroid_polytope_on_exact_points():
    x = plucker_from_basis(np.array([[1, 0, 1, 2], [0, 1, 3, 4]]))
    assert in_matroid_polytope(x)
    vertex = [Fraction(1), Fraction(1), Fraction(0), Fraction(0)]
    assert in_matroid_polytope(x, vertex)
    assert not in_matroid_polytope(x, [Fraction(2), Fraction(0), Fraction(0),
                                       Fraction(0)])


def test_in_matroid_polytope_takes_floats_at_binary_value():
    # A float is rationalized to its exact binary value, so 2/3 in float64
    # misses the affine span of the vertices while the true rational hits it.
    x = plucker_from_basis(np.array([[1, 1, 0], [0, 1, 1]]))
    assert in_matroid_polytope(x, [Fraction(2, 3)] * 3)
    assert not in_matroid_polytope(x, [2 / 3, 2 / 3, 2 / 3])


def test_fiber_residual():
    p = projection_from_basis(BASIS)
    gap, idem = fiber_residual(p, moment_map(plucker_from_basis(BASIS)))
    assert gap == 0 and idem == 0
    z = [Fraction(1), Fraction(1, 2), Fraction(1, 2)]
    gap, idem = fiber_residual(p, z)
    assert gap == Fraction(1, 3) and idem == 0
    with pytest.raises(DimensionError):
        fiber_residual(p, [Fraction(1)])


@pytest.mark.parametrize("seed,d,n", [(0, 1, 4), (1, 2, 5), (2, 3, 6)])
def test_moment_image_lands_in_hypersimplex(seed, d, n):
    rng = np.random.default_rng(seed)
    basis = rng.integers(-5, 6, size=(d, n))
    while np.linalg.matrix_rank(basis.astype(float)) < d:
        basis = rng.integers(-5, 6, size=(d, n))
    z = moment_map(plucker_from_basis(basis))
    assert hypersimplex_contains(list(z), d)
    assert z.d == d and z.n == n
