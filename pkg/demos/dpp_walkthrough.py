"""Exact determinantal point processes from a projection kernel.

The kernel below puts probability 1/4 on four of the six 2-subsets of
{1,2,3,4} and probability 0 on the two "split" pairs -- small enough to
check every number by hand.
"""

from fractions import Fraction

import numpy as np

from grasskit import (CountVector, ProjectionMatrix, correlation, dpp_pmf,
                      dpp_sample, marginals, moebius_pmf)

h = Fraction(1, 2)
kernel = ProjectionMatrix(np.array([[h, 0, h, 0],
                                    [0, h, 0, h],
                                    [h, 0, h, 0],
                                    [0, h, 0, h]], dtype=object))

# -- the exact pmf: principal 2x2 minors --------------------------------------

pmf = dpp_pmf(kernel)
print("pmf over 2-subsets:")
for subset, p in pmf.items():
    print(f"  {subset}: {p}")
print("total mass:", sum(pmf.values()))

# -- correlations and their inversion -----------------------------------------

# Pr[j in the draw] is just the diagonal.
print("marginals:", list(marginals(kernel)))

# Pr[{1,3} both in the draw] is a 2x2 minor; here rows 1 and 3 are equal,
# so the pair never appears together.
print("Pr[1 and 3 together]:", correlation(kernel, (1, 3)))

# Alternating sums over supersets turn correlations back into the pmf.
print("inversion reproduces pmf at (1,2):",
      moebius_pmf(kernel, (1, 2)) == pmf[(1, 2)])

# -- seeded sampling -----------------------------------------------------------

draws = dpp_sample(kernel, seed=42, count=2000)
counts = CountVector.from_samples(draws, 4)
print("2000 seeded draws:")
for subset, c in counts.items():
    print(f"  {subset}: {c:4d}  (exact p = {pmf[subset]})")
print("zero-probability pairs drawn:",
      counts.count((1, 3)) + counts.count((2, 4)))
