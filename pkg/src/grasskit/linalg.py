"""Dense linear algebra in two scalar regimes.

Everything downstream funnels through this module, which supports two
kinds of matrices and never mixes them silently:

* exact    -- numpy object arrays whose entries are ``int`` or
              ``fractions.Fraction``; determinants and ranks are computed
              by fraction-free (Bareiss) elimination and are exact.
* float    -- ordinary float64 arrays; determinants come from LU
              factorization and ranks from the SVD with a relative cutoff.

Conversion between regimes is explicit via :func:`as_exact` and
:func:`as_float`.
"""

from fractions import Fraction

import numpy as np

from .errors import DimensionError, NotInvertible

# Default tolerances for the float regime.  REL_TOL is relative to the
# largest singular value (rank decisions); ABS_TOL is the floor used when
# comparing quantities that may legitimately be zero.
REL_TOL = 1e-9
ABS_TOL = 1e-12

_EXACT_TYPES = (int, np.integer, Fraction)


def is_exact(matrix):
    """True if ``matrix`` is in the exact (object/integer) regime."""
    arr = np.asarray(matrix)
    return arr.dtype == object or arr.dtype.kind in "iu"


def as_exact(data):
    """Return an object-dtype array of Fractions/ints.

    Floats are rejected: converting measured floats to rationals is a
    modelling decision the caller must make explicitly.
    """
    arr = np.asarray(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        v = arr[idx]
        if isinstance(v, Fraction):
            out[idx] = v
        elif isinstance(v, (int, np.integer)):
            out[idx] = int(v)
        else:
            raise TypeError(f"cannot use {type(v).__name__} in the exact regime")
    return out


def as_float(data):
    """Return a float64 array (works on either regime)."""
    arr = np.asarray(data)
    if arr.dtype == object:
        return np.frompyfunc(float, 1, 1)(arr).astype(float)
    return arr.astype(float)


def _require_square(arr):
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")


def _det_bareiss(rows):
    """Exact determinant by Bareiss fraction-free elimination.

    ``rows`` is a list of lists of int/Fraction; it is consumed.  Row swaps
    flip the sign; every division in the update is exact by construction.
    """
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            row_i = rows[i]
            row_k = rows[k]
            for j in range(k + 1, n):
                row_i[j] = Fraction(pivot * row_i[j] - rik * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return sign * Fraction(rows[n - 1][n - 1])


def det(matrix):
    """Determinant of a square matrix; exact in the exact regime."""
    arr = np.asarray(matrix)
    _require_square(arr)
    if is_exact(arr):
        rows = [[Fraction(v) for v in row] for row in arr.tolist()]
        return _det_bareiss(rows)
    if arr.shape[0] == 0:
        return 1.0
    return float(np.linalg.det(arr.astype(float)))


def minor(matrix, rows, cols):
    """Determinant of the submatrix picked by 1-based index sets.

    ``rows`` and ``cols`` must be strictly increasing sequences of equal
    length; out-of-range indices raise IndexError, unequal lengths raise
    DimensionError.
    """
    arr = np.asarray(matrix)
    if arr.ndim != 2:
        raise DimensionError("minor needs a 2-d matrix")
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise DimensionError(f"minor needs equally many rows and columns, got {len(rows)} and {len(cols)}")
    for name, idx, bound in (("row", rows, arr.shape[0]), ("column", cols, arr.shape[1])):
        if any(i < 1 or i > bound for i in idx):
            raise IndexError(f"{name} index out of range 1..{bound}: {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"{name} indices must be strictly increasing: {idx}")
    sub = arr[np.ix_([i - 1 for i in rows], [j - 1 for j in cols])]
    return det(sub)


def _rank_exact(arr):
    rows = [[Fraction(v) for v in row] for row in arr.tolist()]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank_ = 0
    col = 0
    while rank_ < nrows and col < ncols:
        pivot_row = next((r for r in range(rank_, nrows) if rows[r][col] != 0), None)
        if pivot_row is None:
            col += 1
            continue
        rows[rank_], rows[pivot_row] = rows[pivot_row], rows[rank_]
        pv = rows[rank_][col]
        for r in range(rank_ + 1, nrows):
            factor = rows[r][col] / pv
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank_])]
        rank_ += 1
        col += 1
    return rank_


def rank(matrix, rel_tol=REL_TOL):
    """Rank of a matrix: exact elimination, or SVD with a relative cutoff."""
    arr = np.asarray(matrix)
    if arr.ndim != 2:
        raise DimensionError("rank needs a 2-d matrix")
    if 0 in arr.shape:
        return 0
    if is_exact(arr):
        return _rank_exact(arr)
    sv = np.linalg.svd(arr.astype(float), compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > max(rel_tol * sv[0], ABS_TOL)))


def solve_exact(matrix, rhs):
    """Exact solve M x = rhs by Gauss-Jordan over Fractions.

    ``rhs`` may be a vector or a matrix of right-hand sides.  Raises
    NotInvertible when M is singular.
    """
    arr = np.asarray(matrix)
    _require_square(arr)
    n = arr.shape[0]
    b = np.asarray(rhs, dtype=object)
    vector_input = b.ndim == 1
    if vector_input:
        b = b.reshape(n, 1)
    if b.shape[0] != n:
        raise DimensionError("right-hand side has the wrong number of rows")
    aug = [[Fraction(arr[i, j]) for j in range(n)] + [Fraction(b[i, k]) for k in range(b.shape[1])]
           for i in range(n)]
    width = n + b.shape[1]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise NotInvertible("matrix is singular in exact arithmetic")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * c for a, c in zip(aug[r], aug[col])]
    out = np.empty((n, b.shape[1]), dtype=object)
    for i in range(n):
        for k in range(b.shape[1]):
            out[i, k] = aug[i][n + k]
    return out[:, 0] if vector_input else out


def inv_exact(matrix):
    """Exact inverse of a square matrix of ints/Fractions."""
    arr = np.asarray(matrix)
    _require_square(arr)
    n = arr.shape[0]
    eye = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            eye[i, j] = Fraction(int(i == j))
    return solve_exact(arr, eye)


def identity_exact(n):
    """n-by-n exact identity matrix (object dtype, int entries)."""
    eye = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            eye[i, j] = int(i == j)
    return eye


def close(a, b, rel_tol=REL_TOL, abs_tol=ABS_TOL):
    """Scalar closeness test used for float-regime comparisons."""
    a = float(a)
    b = float(b)
    return abs(a - b) <= max(rel_tol * max(abs(a), abs(b)), abs_tol)
