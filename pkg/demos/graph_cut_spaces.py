"""Cut spaces of small graphs: projectors without any linear algebra.

The cut space of an oriented graph is a subspace of R^(#edges).  Its
projector can be assembled from spanning-forest counts alone, and its
diagonal lists the effective resistances of the edges.
"""

from fractions import Fraction

from grasskit import (OrientedGraph, cut_space_basis, effective_resistances,
                      hypersimplex_contains, kirchhoff_projection,
                      moment_from_projection, projection_from_basis,
                      spanning_forest_count)

triangle = OrientedGraph(3, [(1, 2), (2, 3), (1, 3)])
square = OrientedGraph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])

# -- two computations of the same projector ------------------------------------

for name, graph in [("triangle", triangle), ("4-cycle", square)]:
    combinatorial = kirchhoff_projection(graph)
    algebraic = projection_from_basis(cut_space_basis(graph))
    print(f"{name}: forest-count projector == basis projector:",
          combinatorial == algebraic)
    print(f"  spanning trees: {spanning_forest_count(graph)}")
    print(f"  effective resistances: {effective_resistances(graph)}")

# Every edge of the triangle carries resistance 2/3: two of the three
# spanning trees contain any given edge.
assert effective_resistances(triangle) == [Fraction(2, 3)] * 3

# -- resistances are a moment vector --------------------------------------------

# diag(P) always lies in the hypersimplex: entries in [0,1] summing to the
# cut dimension (#vertices - #components).
z = moment_from_projection(kirchhoff_projection(square))
print("resistance vector:", list(z.z))
print("sums to cut dimension", square.cut_dimension(), ":",
      hypersimplex_contains(z, square.cut_dimension()))

# -- a bridge has resistance exactly 1 ------------------------------------------

path = OrientedGraph(4, [(1, 2), (2, 3), (3, 4)])
print("path graph (all bridges):", effective_resistances(path))
