"""Cut spaces of oriented graphs.

An oriented graph with n edges determines the cut space: the span in R^n
of the signed vertex-cut indicator vectors.  Its dimension d is
(vertex count) - (number of components), the nonzero Pluecker coordinates
of the cut space are indexed by spanning forests (maximal acyclic edge
sets, all coordinates +-1 after scaling), and the orthogonal projector
onto it has a purely combinatorial description:

    p_ij = (signed count of edge sets K making both iK and jK forests)
           / (number of spanning forests),

where the sign for i != j compares the directions in which i and j are
traversed along the unique cycle of ijK: opposite directions count +1,
the same direction counts -1.  The diagonal entries are the effective
resistances of the edges.

Everything here is exact rational arithmetic; parallel edges are allowed,
self-loops are not.
"""

import itertools
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import DimensionError, EmptyGraph
from .projector import ProjectionMatrix

# Brute-force forest enumeration is only attempted up to this many edges;
# the matrix-tree determinant route has no such cap.
BRUTE_FORCE_EDGE_CAP = 20


class OrientedGraph:
    """An ordered edge list over vertices 1..vertex_count.

    Edge order is significant: edge i is coordinate i of R^n.
    """

    def __init__(self, vertex_count, edges):
        vertex_count = int(vertex_count)
        if vertex_count < 1:
            raise DimensionError("need at least one vertex")
        cleaned = []
        for tail, head in edges:
            tail, head = int(tail), int(head)
            if not (1 <= tail <= vertex_count and 1 <= head <= vertex_count):
                raise IndexError(f"edge ({tail},{head}) leaves 1..{vertex_count}")
            if tail == head:
                raise ValueError(f"self-loop at vertex {tail} is not allowed")
            cleaned.append((tail, head))
        self.vertex_count = vertex_count
        self.edges = tuple(cleaned)

    @property
    def edge_count(self):
        return len(self.edges)

    def component_labels(self):
        """Vertex -> component id (0-based), via union-find."""
        parent = list(range(self.vertex_count + 1))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for tail, head in self.edges:
            rt, rh = find(tail), find(head)
            if rt != rh:
                parent[rh] = rt
        labels = {}
        out = [0] * (self.vertex_count + 1)
        for v in range(1, self.vertex_count + 1):
            root = find(v)
            if root not in labels:
                labels[root] = len(labels)
            out[v] = labels[root]
        return out[1:]

    def component_count(self):
        return max(self.component_labels()) + 1 if self.vertex_count else 0

    def cut_dimension(self):
        """Dimension of the cut space: vertices minus components."""
        return self.vertex_count - self.component_count()

    def __repr__(self):
        return (f"OrientedGraph(vertices={self.vertex_count}, "
                f"edges={list(self.edges)})")


def _is_forest(graph, edge_indices):
    """Acyclicity of an edge subset, by union-find."""
    parent = list(range(graph.vertex_count + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for idx in edge_indices:
        tail, head = graph.edges[idx]
        rt, rh = find(tail), find(head)
        if rt == rh:
            return False
        parent[rh] = rt
    return True


def cut_space_basis(graph):
    """d x n integer basis of the cut space from vertex-cut rows.

    One row per vertex, skipping the last vertex of each component (their
    cut rows are dependent); entry is +1 where the vertex is the tail of
    the edge, -1 where it is the head.
    """
    if graph.edge_count == 0:
        raise EmptyGraph("the cut space of an edgeless graph has no basis")
    labels = graph.component_labels()
    last_of_component = {}
    for vertex in range(1, graph.vertex_count + 1):
        last_of_component[labels[vertex - 1]] = vertex
    rows = []
    for vertex in range(1, graph.vertex_count + 1):
        if last_of_component[labels[vertex - 1]] == vertex:
            continue
        row = [0] * graph.edge_count
        for idx, (tail, head) in enumerate(graph.edges):
            if tail == vertex:
                row[idx] += 1
            if head == vertex:
                row[idx] -= 1
        rows.append(row)
    if not rows:
        raise EmptyGraph("no independent vertex cuts (isolated vertices only)")
    return np.array(rows, dtype=object)


def _forest_count_brute(graph):
    d = graph.cut_dimension()
    count = 0
    for combo in itertools.combinations(range(graph.edge_count), d):
        if _is_forest(graph, combo):
            count += 1
    return count


def _forest_count_matrix_tree(graph):
    """Product over components of reduced-Laplacian determinants."""
    labels = graph.component_labels()
    total = 1
    for comp in range(max(labels) + 1 if labels else 0):
        vertices = [v for v in range(1, graph.vertex_count + 1)
                    if labels[v - 1] == comp]
        if len(vertices) == 1:
            continue
        index = {v: i for i, v in enumerate(vertices)}
        size = len(vertices)
        lap = [[0] * size for _ in range(size)]
        for tail, head in graph.edges:
            if tail in index and head in index:
                a, b = index[tail], index[head]
                lap[a][a] += 1
                lap[b][b] += 1
                lap[a][b] -= 1
                lap[b][a] -= 1
        reduced = np.array([row[:-1] for row in lap[:-1]], dtype=object)
        det = linalg.det(reduced) if size > 1 else 1
        total *= int(det)
    return total


def spanning_forest_count(graph):
    """Number of maximal acyclic edge subsets.

    Computed by the matrix-tree determinant, cross-checked against brute
    force whenever the edge count allows it; disagreement is a hard error.
    """
    algebraic = _forest_count_matrix_tree(graph)
    if graph.edge_count <= BRUTE_FORCE_EDGE_CAP:
        brute = _forest_count_brute(graph)
        if brute != algebraic:
            raise ArithmeticError(
                f"forest counts disagree: enumeration {brute}, determinant {algebraic}")
    return algebraic


def _adjacency(graph, edge_indices):
    adj = {}
    for idx in edge_indices:
        tail, head = graph.edges[idx]
        adj.setdefault(tail, []).append((head, idx))
        adj.setdefault(head, []).append((tail, idx))
    return adj


def _path_in_forest(graph, edge_indices, start, goal):
    """Vertex-and-edge path from start to goal inside a forest, or None."""
    adj = _adjacency(graph, edge_indices)
    stack = [(start, None, None)]
    seen = {start}
    parent = {}
    while stack:
        vertex, prev, via = stack.pop()
        if prev is not None:
            parent[vertex] = (prev, via)
        if vertex == goal:
            steps = []
            v = goal
            while v != start:
                prev, via = parent[v]
                steps.append((prev, v, via))
                v = prev
            steps.reverse()
            return steps
        for nxt, idx in adj.get(vertex, ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, vertex, idx))
    return None


def _pair_sign(graph, i, j, forest_with_i):
    """Sign contribution of K for the off-diagonal pair (i, j).

    Traverse edge j from tail to head, close the cycle back through the
    forest K + {i}, and see how edge i is crossed on the way: against its
    own orientation gives +1, along it gives -1.
    """
    tail_j, head_j = graph.edges[j]
    steps = _path_in_forest(graph, forest_with_i, head_j, tail_j)
    for frm, to, idx in steps:
        if idx == i:
            tail_i, _ = graph.edges[i]
            return -1 if frm == tail_i else 1
    raise ArithmeticError("cycle through both edges not found")  # unreachable


def kirchhoff_projection(graph):
    """The projector onto the cut space, assembled combinatorially.

    For each edge pair, sum signed indicators over edge sets K of size
    d - 1 for which both iK and jK are spanning forests, then divide by
    the total number of spanning forests.  Exact rationals; agrees with
    the linear-algebra projector built from any cut-space basis.
    """
    n = graph.edge_count
    if n == 0:
        raise EmptyGraph("no edges, no projector")
    d = graph.cut_dimension()
    forests = spanning_forest_count(graph)
    entries = np.empty((n, n), dtype=object)
    entries[:] = 0
    others = list(range(n))
    for i in range(n):
        total = 0
        for combo in itertools.combinations([e for e in others if e != i], d - 1):
            if _is_forest(graph, combo + (i,)):
                total += 1
        entries[i, i] = Fraction(total, forests)
    for i in range(n):
        for j in range(i + 1, n):
            rest = [e for e in others if e != i and e != j]
            total = 0
            for combo in itertools.combinations(rest, d - 1):
                with_i = combo + (i,)
                if not _is_forest(graph, with_i):
                    continue
                if not _is_forest(graph, combo + (j,)):
                    continue
                total += _pair_sign(graph, i, j, with_i)
            value = Fraction(total, forests)
            entries[i, j] = value
            entries[j, i] = value
    return ProjectionMatrix(entries)


def effective_resistances(graph):
    """Diagonal of the cut-space projector, one rational per edge.

    Bridges have resistance exactly 1; the values sum to the cut-space
    dimension.
    """
    d = graph.cut_dimension()
    forests = spanning_forest_count(graph)
    out = []
    for i in range(graph.edge_count):
        total = 0
        for combo in itertools.combinations(
                [e for e in range(graph.edge_count) if e != i], d - 1):
            if _is_forest(graph, combo + (i,)):
                total += 1
        out.append(Fraction(total, forests))
    return out
