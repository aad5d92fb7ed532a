"""Which nonnegative vectors are coordinate-wise squares of minors?"""

from fractions import Fraction

import numpy as np

from grasskit import (SquaredPlucker, pgr_degree, plucker_from_basis,
                      sgr2_residual, sgr4_quartic, sgr_degree, square_plucker)
from grasskit.linalg import det

# Squaring the minors of a 2-plane in R^5 gives a point that passes the
# membership test exactly.
basis = np.array([[1, 2, 0, -1, 3],
                  [0, 1, 1, 2, -2]])
q = square_plucker(plucker_from_basis(basis))
print("squared minors:", [v for _, v in q.items()])
print("membership residual (should be 0):", sgr2_residual(q))

# Perturb one coordinate and the residual certifies the failure.
bumped = dict(q.items())
bumped[(1, 2)] = bumped[(1, 2)] + 1
q_bad = SquaredPlucker(2, 5, bumped)
print("residual after bumping one square:", sgr2_residual(q_bad))

# For 2-planes in R^4 membership is a single quartic -- the determinant of
# the symmetric zero-diagonal matrix built from the six values.
values = {(1, 2): Fraction(1, 2), (1, 3): 0, (1, 4): 0,
          (2, 3): 0, (2, 4): 0, (3, 4): Fraction(1, 2)}
point = SquaredPlucker(2, 4, values)
print("quartic at a non-member:", sgr4_quartic(point))
print("same value as det of the matrix form:",
      sgr4_quartic(point) == det(point.matrix_form()))

# -- how complicated are these varieties? --------------------------------------

print("squared-variety degrees:",
      [(n, sgr_degree(2, n)) for n in range(4, 9)])
print("positive-variety degree table row n=6:",
      [pgr_degree(d, 6) for d in range(7)])
print("table symmetry: degree(2,6) == degree(4,6):",
      pgr_degree(2, 6) == pgr_degree(4, 6))
