"""Orthogonal projection matrices and conversions to/from Pluecker vectors.

A d-dimensional subspace of R^n is represented affinely by the unique
symmetric idempotent n x n matrix P whose column space is the subspace.
Construction validates all defining properties eagerly (fail fast, never
propagate NaNs): symmetry, idempotency, integral trace d = rank, diagonal
in [0, 1].
"""

import math
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import (DimensionError, EmptyBasis, NotAProjection, OutOfTable,
                     RankDeficient)
from .plucker import PluckerVector

# Degrees of the varieties of n x n symmetric idempotents of fixed trace d,
# one stored row per n = 3..10, entry index = d.  These are reference
# constants (recomputing them needs numerical algebraic geometry).
_PGR_DEGREE_ROWS = {
    3: (1, 4, 4, 1),
    4: (1, 8, 12, 8, 1),
    5: (1, 16, 40, 40, 16, 1),
    6: (1, 32, 140, 184, 140, 32, 1),
    7: (1, 64, 504, 992, 992, 504, 64, 1),
    8: (1, 128, 1848, 5824, 7056, 5824, 1848, 128, 1),
    9: (1, 256, 6864, 36096, 60864, 60864, 36096, 6864, 256, 1),
    10: (1, 512, 25740, 232320, 587664, 672288, 587664, 232320, 25740, 512, 1),
}

FLOAT_TOL = 1e-9


class ProjectionMatrix:
    """Validated symmetric idempotent matrix with integral trace."""

    def __init__(self, entries, tol=FLOAT_TOL):
        arr = np.asarray(entries)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionError(f"projection matrix must be square, got {arr.shape}")
        n = arr.shape[0]
        self.exact = linalg.is_exact(arr)
        if self.exact:
            arr = linalg.as_exact(arr)
            if not (arr.T == arr).all():
                raise NotAProjection("matrix is not symmetric")
            if not ((arr @ arr) == arr).all():
                raise NotAProjection("matrix is not idempotent")
            trace = sum(arr[i, i] for i in range(n))
            if Fraction(trace).denominator != 1:
                raise NotAProjection(f"trace {trace} is not an integer")
            d = int(trace)
            if any(arr[i, i] < 0 or arr[i, i] > 1 for i in range(n)):
                raise NotAProjection("diagonal entries leave [0, 1]")
            if linalg.rank(arr) != d:
                raise NotAProjection("rank does not equal trace")
        else:
            arr = arr.astype(float)
            if not np.all(np.isfinite(arr)):
                raise NotAProjection("matrix has non-finite entries")
            if np.max(np.abs(arr - arr.T), initial=0.0) > tol:
                raise NotAProjection("matrix is not symmetric within tolerance")
            arr = (arr + arr.T) / 2.0
            if np.linalg.norm(arr @ arr - arr, "fro") > tol:
                raise NotAProjection("matrix is not idempotent within tolerance")
            trace = float(np.trace(arr))
            d = int(round(trace))
            if abs(trace - d) > 1e-7 or d < 0 or d > n:
                raise NotAProjection(f"trace {trace} is not a nonnegative integer <= {n}")
            diag = np.diag(arr)
            if np.any(diag < -tol) or np.any(diag > 1 + tol):
                raise NotAProjection("diagonal entries leave [0, 1]")
        self.n = n
        self.d = d
        self._matrix = arr
        if not self.exact:
            self._matrix.setflags(write=False)

    @property
    def matrix(self):
        return self._matrix

    def entry(self, i, j):
        """1-based entry access."""
        return self._matrix[i - 1, j - 1]

    def diagonal(self):
        return tuple(self._matrix[i, i] for i in range(self.n))

    def to_float(self):
        if not self.exact:
            return self
        return ProjectionMatrix(linalg.as_float(self._matrix))

    def __eq__(self, other):
        if not isinstance(other, ProjectionMatrix):
            return NotImplemented
        if self.n != other.n or self.exact != other.exact:
            return False
        if self.exact:
            return bool((self._matrix == other._matrix).all())
        return bool(np.allclose(self._matrix, other._matrix,
                                rtol=linalg.REL_TOL, atol=linalg.ABS_TOL))

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"ProjectionMatrix(n={self.n}, d={self.d}, {kind})"


def projection_from_basis(basis):
    """P = A^T (A A^T)^{-1} A for a full-rank d x n basis matrix A."""
    arr = np.asarray(basis)
    if arr.ndim != 2:
        raise DimensionError("basis must be a 2-d matrix")
    d, n = arr.shape
    if not (1 <= d <= n):
        raise DimensionError(f"need 1 <= d <= n, got shape {arr.shape}")
    if linalg.is_exact(arr):
        a = linalg.as_exact(arr)
        if linalg.rank(a) < d:
            raise RankDeficient("basis rows are linearly dependent")
        gram_inv = linalg.inv_exact(a @ a.T)
        return ProjectionMatrix(a.T @ gram_inv @ a)
    a = arr.astype(float)
    if linalg.rank(a) < d:
        raise RankDeficient("basis rows are linearly dependent")
    gram_inv = np.linalg.inv(a @ a.T)
    return ProjectionMatrix(a.T @ gram_inv @ a)


def projection_from_plucker(x):
    """Projector from Pluecker coordinates: P = C C^T / sum_I x_I^2.

    C is the cocircuit matrix of the vector, so
    p_ij = sum_K x_{iK} x_{jK} / sum_I x_I^2 -- scale-invariant in x.
    The input must satisfy the quadratic exchange relations
    (NotOnGrassmannian otherwise; ZeroVector is raised at construction of
    the vector itself).
    """
    if not isinstance(x, PluckerVector):
        raise TypeError("projection_from_plucker expects a PluckerVector")
    c = x.cocircuit()
    ss = x.sum_of_squares()
    prod = c @ c.T
    if x.exact:
        entries = np.empty((x.n, x.n), dtype=object)
        for i in range(x.n):
            for j in range(x.n):
                entries[i, j] = Fraction(prod[i, j], 1) / ss
        return ProjectionMatrix(entries)
    return ProjectionMatrix(prod / ss)


def basis_from_projection(p):
    """d linearly independent rows of P, by greedy top-to-bottom scan.

    The row space of the result equals the column space of P.  Raises
    EmptyBasis for the zero projector.
    """
    if not isinstance(p, ProjectionMatrix):
        p = ProjectionMatrix(p)
    if p.d == 0:
        raise EmptyBasis("the zero projector has no basis rows")
    chosen = []
    for i in range(p.n):
        candidate = chosen + [list(p.matrix[i, :])]
        stacked = np.array(candidate, dtype=object if p.exact else float)
        if linalg.rank(stacked) > len(chosen):
            chosen = candidate
            if len(chosen) == p.d:
                break
    return np.array(chosen, dtype=object if p.exact else float)


def idempotency_residual(m):
    """Frobenius norm of M^2 - M for a symmetric matrix M.

    Exact zero (int 0) is returned when the residual vanishes identically in
    the exact regime; otherwise a float.
    """
    if isinstance(m, ProjectionMatrix):
        m = m.matrix
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError("idempotency_residual needs a square matrix")
    if linalg.is_exact(arr):
        a = linalg.as_exact(arr)
        diff = a @ a - a
        ss = sum(v * v for v in diff.ravel())
        if ss == 0:
            return 0
        return math.sqrt(float(ss))
    a = arr.astype(float)
    return float(np.linalg.norm(a @ a - a, "fro"))


def complement(p):
    """The involution P -> Id - P (projector onto the orthogonal complement)."""
    if not isinstance(p, ProjectionMatrix):
        p = ProjectionMatrix(p)
    if p.exact:
        return ProjectionMatrix(linalg.identity_exact(p.n) - p.matrix)
    return ProjectionMatrix(np.eye(p.n) - p.matrix)


def pgr_degree(d, n):
    """Projective degree of the variety of trace-d projectors (table lookup).

    Stored data covers n <= 10; closed forms handle the edge columns
    (d in {0, n} -> 1; d in {1, n-1} -> 2^(n-1)).  Symmetric in d <-> n-d.
    """
    d = int(d)
    n = int(n)
    if not (0 <= d <= n):
        raise DimensionError(f"need 0 <= d <= n, got d={d}, n={n}")
    if n > 10:
        raise OutOfTable(f"degree table stops at n=10, requested n={n}")
    if d in (0, n):
        return 1
    if d in (1, n - 1):
        return 2 ** (n - 1)
    return _PGR_DEGREE_ROWS[n][d]
