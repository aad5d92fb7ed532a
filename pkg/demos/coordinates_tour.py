"""A subspace in two coordinate systems, kept exact the whole way."""

import numpy as np

from grasskit import (complement, moment_map, plucker_from_basis,
                      plucker_residual, projection_from_basis,
                      projection_from_plucker)

# -- a 2-plane in R^4, spanned by two integer rows ---------------------------

basis = np.array([[1, 0, 1, 2],
                  [0, 1, 3, 4]])
x = plucker_from_basis(basis)

print("maximal minors of the basis (exact):")
for subset, value in x.items():
    print(f"  columns {subset}: {value}")

# Minors of any full-rank basis of the same row space differ only by a
# common scale, so the vector is a projective invariant of the subspace.
other_basis = np.array([[2, 1, 5, 8],     # row1 + row2 doubled etc.
                        [1, 1, 4, 6]])
y = plucker_from_basis(other_basis)
print("same subspace from a different basis?", x.projectively_equal(y))

# The quadratic exchange relations cut out exactly the consistent vectors.
print("relation residual of a real subspace:", plucker_residual(x))

# -- the orthogonal projector, two ways ---------------------------------------

p_from_basis = projection_from_basis(basis)
p_from_minors = projection_from_plucker(x)
print("projector routes agree exactly?", p_from_basis == p_from_minors)
print("P[1,1] =", p_from_basis.entry(1, 1), " trace =", sum(p_from_basis.diagonal()))

# P and I - P split R^4 into the subspace and its orthogonal complement.
q = complement(p_from_basis)
print("complement trace:", sum(q.diagonal()))

# -- the diagonal is a moment vector ------------------------------------------

z = moment_map(x)
print("moment vector:", list(z.z))
print("matches diag(P)?", list(z.z) == list(p_from_basis.diagonal()))
print("coordinates sum to d =", sum(z.z))
