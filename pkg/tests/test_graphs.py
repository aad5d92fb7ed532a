"""Cut spaces of oriented graphs and their combinatorial projectors."""

from fractions import Fraction

import numpy as np
import pytest

from grasskit import (OrientedGraph, cut_space_basis, effective_resistances,
                      kirchhoff_projection, projection_from_basis,
                      spanning_forest_count)
from grasskit.errors import EmptyGraph
from grasskit.linalg import rank

TRIANGLE = OrientedGraph(3, [(1, 2), (2, 3), (1, 3)])
FOUR_CYCLE = OrientedGraph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def random_connected_graph(rng, max_edges=6):
    """Rejection-sample a connected multigraph with at most max_edges edges."""
    while True:
        vertices = int(rng.integers(2, 5))
        edge_count = int(rng.integers(vertices - 1, max_edges + 1))
        edges = []
        for _ in range(edge_count):
            tail = int(rng.integers(1, vertices + 1))
            head = int(rng.integers(1, vertices + 1))
            while head == tail:
                head = int(rng.integers(1, vertices + 1))
            edges.append((tail, head))
        graph = OrientedGraph(vertices, edges)
        if graph.cut_dimension() == vertices - 1:
            return graph


def test_graph_validation():
    with pytest.raises(ValueError):
        OrientedGraph(3, [(1, 1)])
    with pytest.raises(IndexError):
        OrientedGraph(3, [(1, 4)])
    assert OrientedGraph(4, []).edge_count == 0


def test_components_and_cut_dimension():
    graph = OrientedGraph(5, [(1, 2), (4, 5)])
    labels = graph.component_labels()
    assert labels[0] == labels[1] and labels[3] == labels[4]
    assert labels[0] != labels[2] != labels[3]
    assert graph.cut_dimension() == 2
    assert TRIANGLE.cut_dimension() == 2


def test_cut_space_basis_spans_incidence_rows():
    basis = cut_space_basis(TRIANGLE)
    assert basis.shape == (2, 3)
    assert rank(basis) == 2
    # every incidence row lies in the span: stacking any of them on top of
    # the basis must not raise the rank
    incidence = np.zeros((3, 3), dtype=int)
    for j, (tail, head) in enumerate(TRIANGLE.edges):
        incidence[tail - 1, j] = 1
        incidence[head - 1, j] = -1
    for row in incidence:
        stacked = np.vstack([basis, row[None, :]])
        assert rank(stacked) == 2


def test_cut_space_basis_empty_graph():
    with pytest.raises(EmptyGraph):
        cut_space_basis(OrientedGraph(3, []))


def test_forest_counts_frozen():
    assert spanning_forest_count(TRIANGLE) == 3
    assert spanning_forest_count(FOUR_CYCLE) == 4
    complete4 = OrientedGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    assert spanning_forest_count(complete4) == 16
    two_parts = OrientedGraph(4, [(1, 2), (3, 4)])
    assert spanning_forest_count(two_parts) == 1


def test_forest_count_with_parallel_edges():
    doubled = OrientedGraph(2, [(1, 2), (1, 2)])
    assert spanning_forest_count(doubled) == 2


def test_kirchhoff_triangle_matches_linear_algebra():
    combinatorial = kirchhoff_projection(TRIANGLE)
    linear = projection_from_basis(cut_space_basis(TRIANGLE))
    assert combinatorial == linear
    assert combinatorial.entry(1, 1) == Fraction(2, 3)


def test_kirchhoff_four_cycle_diagonal():
    p = kirchhoff_projection(FOUR_CYCLE)
    assert p.diagonal() == (Fraction(3, 4),) * 4
    assert p == projection_from_basis(cut_space_basis(FOUR_CYCLE))


@pytest.mark.parametrize("seed", range(12))
def test_kirchhoff_matches_linear_algebra_on_random_graphs(seed):
    rng = np.random.default_rng(900 + seed)
    graph = random_connected_graph(rng)
    assert kirchhoff_projection(graph) == \
        projection_from_basis(cut_space_basis(graph))


def test_kirchhoff_on_disconnected_graph():
    graph = OrientedGraph(4, [(1, 2), (3, 4)])
    p = kirchhoff_projection(graph)
    assert p == projection_from_basis(cut_space_basis(graph))
    assert p.diagonal() == (Fraction(1), Fraction(1))    # both edges bridges


def test_effective_resistances():
    assert effective_resistances(TRIANGLE) == [Fraction(2, 3)] * 3
    assert effective_resistances(FOUR_CYCLE) == [Fraction(3, 4)] * 4
    bridge = OrientedGraph(4, [(1, 2), (2, 3), (3, 4)])
    assert effective_resistances(bridge) == [Fraction(1)] * 3


def test_resistances_sum_to_cut_dimension():
    rng = np.random.default_rng(77)
    for _ in range(5):
        graph = random_connected_graph(rng)
        values = effective_resistances(graph)
        assert sum(values) == graph.cut_dimension()
