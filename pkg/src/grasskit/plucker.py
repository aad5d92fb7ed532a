"""Pluecker coordinates of d-dimensional subspaces of R^n.

A subspace spanned by the rows of a full-rank d x n matrix A is encoded by
the vector of its maximal minors, indexed by the C(n, d) strictly
increasing d-subsets of {1, ..., n} in lexicographic order.  The vector is
projective: two coordinate vectors describe the same subspace exactly when
they are proportional.  Canonical representatives:

* exact regime  -- first (lexicographically) nonzero coordinate equals 1;
* float regime  -- unit Euclidean norm with the first nonzero coordinate
  positive.

Index sets are 1-based everywhere in the public interface.
"""

import itertools
import math
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import (DimensionError, NotOnGrassmannian, RankDeficient,
                     ZeroVector)


def d_subsets(n, d):
    """All strictly increasing d-subsets of {1..n}, lexicographically."""
    if d < 0 or n < 0 or d > n:
        raise DimensionError(f"no {d}-subsets of a {n}-set")
    return list(itertools.combinations(range(1, n + 1), d))


def sort_signed(indices):
    """Sort an index tuple, tracking the sign of the permutation.

    Returns ``(sorted_tuple, sign)``; a repeated index gives ``(None, 0)``.
    """
    seq = list(indices)
    sign = 1
    # insertion sort; each adjacent swap flips the sign
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(seq, seq[1:]):
        if a == b:
            return None, 0
    return tuple(seq), sign


class PluckerVector:
    """Immutable bundle (d, n, coordinates) in one scalar regime."""

    def __init__(self, d, n, coords):
        if not (1 <= d <= n):
            raise DimensionError(f"need 1 <= d <= n, got d={d}, n={n}")
        self.d = int(d)
        self.n = int(n)
        expected = d_subsets(n, d)
        cleaned = {}
        for key, value in coords.items():
            cleaned[tuple(int(i) for i in key)] = value
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
        self.exact = exact
        if exact:
            values = [v if isinstance(v, Fraction) else int(v) for v in values]
        else:
            values = [float(v) for v in values]
        if all(v == 0 for v in values):
            raise ZeroVector("all Pluecker coordinates are zero")
        self.coords = dict(zip(expected, values))

    # -- basic access ---------------------------------------------------

    def subsets(self):
        return list(self.coords)

    def items(self):
        return self.coords.items()

    def vector(self):
        """Coordinates as a numpy array in lexicographic subset order."""
        vals = list(self.coords.values())
        if self.exact:
            return np.array(vals, dtype=object)
        return np.array(vals, dtype=float)

    def coordinate(self, indices):
        """Signed coordinate for an arbitrary index tuple.

        Repeated indices give zero; unsorted tuples pick up the sign of the
        sorting permutation.
        """
        indices = tuple(int(i) for i in indices)
        if len(indices) != self.d:
            raise DimensionError(f"expected {self.d} indices, got {len(indices)}")
        if any(i < 1 or i > self.n for i in indices):
            raise IndexError(f"index out of range 1..{self.n}: {indices}")
        key, sign = sort_signed(indices)
        if sign == 0:
            return 0 if self.exact else 0.0
        return sign * self.coords[key]

    def sum_of_squares(self):
        return sum(v * v for v in self.coords.values())

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"PluckerVector(d={self.d}, n={self.n}, {kind})"

    # -- regime and normalization ---------------------------------------

    def to_float(self):
        return PluckerVector(self.d, self.n,
                             {s: float(v) for s, v in self.coords.items()})

    def normalized(self):
        """Canonical projective representative (see module docstring)."""
        values = list(self.coords.values())
        if self.exact:
            lead = next(v for v in values if v != 0)
            scaled = [Fraction(v, 1) / lead for v in values]
        else:
            norm = math.sqrt(sum(v * v for v in values))
            scaled = [v / norm for v in values]
            lead = next(v for v in scaled if v != 0.0)
            if lead < 0:
                scaled = [-v for v in scaled]
        return PluckerVector(self.d, self.n, dict(zip(self.coords, scaled)))

    def projectively_equal(self, other, rel_tol=linalg.REL_TOL):
        """Projective comparison via canonical representatives."""
        if (self.d, self.n) != (other.d, other.n):
            return False
        a = self.normalized()
        b = other.normalized()
        if a.exact and b.exact:
            return a.coords == b.coords
        va = np.array([float(v) for v in a.coords.values()])
        vb = np.array([float(v) for v in b.coords.values()])
        return bool(np.allclose(va, vb, rtol=rel_tol, atol=linalg.ABS_TOL))

    # -- consistency ------------------------------------------------------

    def residual(self):
        """Largest violation of the three-term quadratic exchange relations.

        For every (d-2)-subset S and every four extra indices a<b<c<e the
        coordinates of a genuine subspace satisfy

            x_{Sab} x_{Sce} - x_{Sac} x_{Sbe} + x_{Sae} x_{Sbc} = 0.

        The maximum absolute violation over all such choices, evaluated on
        the canonical representative, is returned (0 when d < 2 or
        d > n - 2, where no relation exists).
        """
        if self.d < 2 or self.d > self.n - 2:
            return 0 if self.exact else 0.0
        norm = self.normalized()
        best = 0 if self.exact else 0.0
        universe = range(1, self.n + 1)
        for s in itertools.combinations(universe, self.d - 2):
            rest = [i for i in universe if i not in s]
            for a, b, c, e in itertools.combinations(rest, 4):
                t = (norm.coordinate(s + (a, b)) * norm.coordinate(s + (c, e))
                     - norm.coordinate(s + (a, c)) * norm.coordinate(s + (b, e))
                     + norm.coordinate(s + (a, e)) * norm.coordinate(s + (b, c)))
                if abs(t) > best:
                    best = abs(t)
        return best

    def cocircuit(self, tol=linalg.REL_TOL):
        """n x C(n, d-1) matrix with entry (i, K) = signed coordinate x_{iK}.

        Rows are indexed by ground-set elements, columns by the (d-1)-subsets
        in lexicographic order; the entry vanishes when i is in K.  Raises
        NotOnGrassmannian if the quadratic relations fail (exactly in the
        exact regime, beyond ``tol`` in the float regime).
        """
        res = self.residual()
        if self.exact:
            if res != 0:
                raise NotOnGrassmannian(f"exchange relations violated by {res}")
        elif float(res) > tol:
            raise NotOnGrassmannian(f"exchange relations violated by {float(res):.3e}")
        columns = d_subsets(self.n, self.d - 1)
        mat = np.empty((self.n, len(columns)), dtype=object if self.exact else float)
        for col, k in enumerate(columns):
            for i in range(1, self.n + 1):
                if i in k:
                    mat[i - 1, col] = 0 if self.exact else 0.0
                else:
                    mat[i - 1, col] = self.coordinate((i,) + k)
        return mat

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_basis(cls, basis):
        """Pluecker vector of the row space of a full-rank d x n matrix."""
        arr = np.asarray(basis)
        if arr.ndim != 2:
            raise DimensionError("basis must be a 2-d matrix")
        d, n = arr.shape
        if not (1 <= d <= n):
            raise DimensionError(f"need 1 <= d <= n rows/columns, got {arr.shape}")
        exact = linalg.is_exact(arr)
        work = linalg.as_exact(arr) if exact else arr.astype(float)
        if linalg.rank(work) < d:
            raise RankDeficient(f"basis rows span only rank {linalg.rank(work)} < {d}")
        coords = {}
        for subset in d_subsets(n, d):
            cols = [j - 1 for j in subset]
            coords[subset] = linalg.det(work[:, cols])
        return cls(d, n, coords).normalized()


def plucker_from_basis(basis):
    """Canonical Pluecker vector of the row space of ``basis``."""
    return PluckerVector.from_basis(basis)


def plucker_residual(vector):
    """Max violation of the quadratic exchange relations (see class docs)."""
    return vector.residual()


def cocircuit_matrix(vector, tol=linalg.REL_TOL):
    """Cocircuit matrix of a consistent Pluecker vector (see class docs)."""
    return vector.cocircuit(tol=tol)
