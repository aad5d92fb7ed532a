"""Squared Pluecker coordinates and the image variety of coordinate squaring.

Squaring the Pluecker coordinates of a d-plane and normalizing to sum 1
gives a probability vector over d-subsets; the closure of all such vectors
is an irreducible variety whose membership (for d = 2) is cut out by the
4 x 4 minors of the symmetric matrix Q = (q_ij) with zero diagonal.
"""

import itertools
import math
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import DimensionError, DomainError, WrongDimension, ZeroVector
from .plucker import PluckerVector, d_subsets


class SquaredPlucker:
    """Nonnegative coordinates over d-subsets, normalized to sum 1."""

    def __init__(self, d, n, q):
        if not (1 <= d <= n):
            raise DimensionError(f"need 1 <= d <= n, got d={d}, n={n}")
        self.d = int(d)
        self.n = int(n)
        expected = d_subsets(n, d)
        cleaned = {tuple(int(i) for i in key): value for key, value in q.items()}
        missing = [s for s in expected if s not in cleaned]
        extra = [s for s in cleaned if s not in set(expected)]
        if missing or extra:
            raise DimensionError(
                f"coordinates must cover exactly the {len(expected)} subsets; "
                f"missing {missing[:3]}, unexpected {extra[:3]}")
        values = [cleaned[s] for s in expected]
        exact = all(isinstance(v, (int, np.integer, Fraction)) for v in values)
        floaty = all(isinstance(v, (float, np.floating)) for v in values)
        if not (exact or floaty):
            raise TypeError("coordinates mix exact and float scalars")
        if any(v < 0 for v in values):
            raise DomainError("squared coordinates must be nonnegative")
        total = sum(values)
        if total == 0:
            raise ZeroVector("all squared coordinates are zero")
        if exact:
            values = [Fraction(v, 1) / total for v in values]
        else:
            values = [float(v) / total for v in values]
        self.exact = exact
        self.q = dict(zip(expected, values))

    def subsets(self):
        return list(self.q)

    def items(self):
        return self.q.items()

    def value(self, subset):
        return self.q[tuple(sorted(int(i) for i in subset))]

    def vector(self):
        vals = list(self.q.values())
        return np.array(vals, dtype=object if self.exact else float)

    def to_float(self):
        return SquaredPlucker(self.d, self.n,
                              {s: float(v) for s, v in self.q.items()})

    def matrix_form(self):
        """For d = 2: the symmetric n x n matrix with zero diagonal and
        off-diagonal entries q_{ij}."""
        if self.d != 2:
            raise WrongDimension("matrix form exists only for d=2")
        zero = 0 if self.exact else 0.0
        mat = np.empty((self.n, self.n), dtype=object if self.exact else float)
        mat[:] = zero
        for (i, j), value in self.q.items():
            mat[i - 1, j - 1] = value
            mat[j - 1, i - 1] = value
        return mat

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"SquaredPlucker(d={self.d}, n={self.n}, {kind})"


def square_plucker(x):
    """Coordinate-wise square of a Pluecker vector, normalized to sum 1.

    The result is exactly the pmf of the projection determinantal point
    process attached to the same subspace.
    """
    if not isinstance(x, PluckerVector):
        raise TypeError("square_plucker expects a PluckerVector")
    return SquaredPlucker(x.d, x.n, {s: v * v for s, v in x.items()})


def sgr2_residual(q):
    """Largest absolute 4 x 4 minor of the zero-diagonal matrix Q (d = 2).

    Vanishing of all these minors characterizes membership of q in the
    squared image variety (set-theoretically).  Returns 0 for n < 4, where
    no 4 x 4 minor exists.
    """
    if not isinstance(q, SquaredPlucker):
        raise TypeError("sgr2_residual expects a SquaredPlucker")
    if q.d != 2:
        raise WrongDimension(f"residual is defined for d=2, got d={q.d}")
    if q.n < 4:
        return 0 if q.exact else 0.0
    mat = q.matrix_form()
    best = 0 if q.exact else 0.0
    quads = list(itertools.combinations(range(1, q.n + 1), 4))
    for rows in quads:
        for cols in quads:
            value = linalg.minor(mat, rows, cols)
            if abs(value) > best:
                best = abs(value)
    return best


def sgr4_quartic(q):
    """The quartic whose vanishing cuts the squared image for (d, n) = (2, 4).

    Equals det of the zero-diagonal symmetric matrix Q identically:

        q12^2 q34^2 + q13^2 q24^2 + q14^2 q23^2
        - 2 q12 q13 q24 q34 - 2 q12 q14 q23 q34 - 2 q13 q14 q23 q24.
    """
    if not isinstance(q, SquaredPlucker):
        raise TypeError("sgr4_quartic expects a SquaredPlucker")
    if (q.d, q.n) != (2, 4):
        raise WrongDimension(f"quartic is defined for (d,n)=(2,4), got ({q.d},{q.n})")
    v = q.q
    q12, q13, q14 = v[(1, 2)], v[(1, 3)], v[(1, 4)]
    q23, q24, q34 = v[(2, 3)], v[(2, 4)], v[(3, 4)]
    return (q12 ** 2 * q34 ** 2 + q13 ** 2 * q24 ** 2 + q14 ** 2 * q23 ** 2
            - 2 * q12 * q13 * q24 * q34
            - 2 * q12 * q14 * q23 * q34
            - 2 * q13 * q14 * q23 * q24)


def sgr_degree(d, n):
    """Projective degree of the squared image variety, exactly.

        2^((d-1)(n-d-1)) * (d(n-d))! / prod_{j=1}^{d} j(j+1)...(j+n-d-1)

    The division is exact; integer arithmetic throughout.
    """
    d = int(d)
    n = int(n)
    if not (1 <= d < n):
        raise DimensionError(f"need 1 <= d < n, got d={d}, n={n}")
    numerator = 2 ** ((d - 1) * (n - d - 1)) * math.factorial(d * (n - d))
    denominator = 1
    for j in range(1, d + 1):
        for t in range(n - d):
            denominator *= j + t
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError("degree formula did not divide exactly")
    return quotient
