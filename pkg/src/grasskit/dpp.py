"""Projection determinantal point processes.

A validated projection matrix P of trace d is the kernel of a point
process on d-subsets of {1..n} with

    pmf(I)          = det(P_I)              (principal minor)
    Pr[J subset X]  = det(P_J)              (correlation function)
    marginal(i)     = p_ii                  (diagonal)

and the pmf is recoverable from correlations by an alternating sum over
the Boolean lattice.  Sampling is by sequential conditioning: pick an
element proportionally to the current diagonal, deflate the kernel by the
rank-one projector onto the picked column, repeat d times.
"""

import itertools
import math

import numpy as np

from .errors import DimensionError, DomainError
from .plucker import d_subsets
from .projector import ProjectionMatrix

# Exact pmf enumeration is refused beyond this many subsets; sampling and
# marginals remain available at any size.
ENUMERATION_CAP = 10_000

_DIAG_ONE = 1.0 - 1e-9   # diagonal entries at least this are forced picks
_DIAG_ZERO = 1e-12       # diagonal entries at most this are excluded


def _as_kernel(p):
    if isinstance(p, ProjectionMatrix):
        return p
    return ProjectionMatrix(p)


def dpp_pmf(p):
    """All C(n, d) principal d x d minors of P, as a subset-keyed map.

    Exact rationals in the exact regime.  d = 0 gives the point mass on
    the empty subset.
    """
    p = _as_kernel(p)
    if p.d == 0:
        return {(): 1 if p.exact else 1.0}
    if math.comb(p.n, p.d) > ENUMERATION_CAP:
        raise DomainError(
            f"C({p.n},{p.d}) subsets exceed the enumeration cap {ENUMERATION_CAP}")
    from . import linalg
    out = {}
    for subset in d_subsets(p.n, p.d):
        out[subset] = linalg.minor(p.matrix, subset, subset)
    return out


def correlation(p, j):
    """Pr[J subset of the sample] = det(P_J) for an index set of any size.

    The empty set gives 1; any J larger than d gives 0 because the kernel
    has rank d.
    """
    p = _as_kernel(p)
    j = tuple(sorted(int(i) for i in j))
    if len(set(j)) != len(j):
        raise ValueError(f"correlation index set has repeats: {j}")
    if any(i < 1 or i > p.n for i in j):
        raise IndexError(f"index out of range 1..{p.n}: {j}")
    if not j:
        return 1 if p.exact else 1.0
    from . import linalg
    return linalg.minor(p.matrix, j, j)


def moebius_pmf(p, i):
    """Recover pmf(I) from correlations by alternating-sum inversion:

        pmf(I) = sum over J containing I of (-1)^(|J| - |I|) det(P_J).

    Brute force over all 2^(n-d) supersets; agrees with dpp_pmf exactly.
    """
    p = _as_kernel(p)
    i = tuple(sorted(int(k) for k in i))
    if len(i) != p.d:
        raise DimensionError(f"index set must have size d={p.d}, got {len(i)}")
    rest = [k for k in range(1, p.n + 1) if k not in i]
    total = 0 if p.exact else 0.0
    for size in range(len(rest) + 1):
        for extra in itertools.combinations(rest, size):
            j = tuple(sorted(i + extra))
            term = correlation(p, j)
            total = total + term if size % 2 == 0 else total - term
    return total


def marginals(p):
    """Vector of containment probabilities Pr[i in X] = p_ii."""
    p = _as_kernel(p)
    return p.diagonal()


def dpp_sample(p, seed, count):
    """``count`` independent draws, deterministic given ``seed``.

    Float regime.  Elements with diagonal ~1 are forced before any random
    choice and ~0 elements are never picked; after each deflation the
    remaining diagonal is rescaled to the remaining integer rank to stop
    drift.  Returns a list of sorted 1-based d-tuples.
    """
    p = _as_kernel(p).to_float()
    n, d = p.n, p.d
    rng = np.random.default_rng(seed)
    kernel0 = np.array(p.matrix, dtype=float)
    draws = []
    for _ in range(int(count)):
        kernel = kernel0.copy()
        available = np.ones(n, dtype=bool)
        chosen = []
        for step in range(d):
            remaining = d - step
            diag = kernel.diagonal().copy()
            diag[~available] = 0.0
            np.clip(diag, 0.0, 1.0, out=diag)
            if diag.max() >= _DIAG_ONE:
                pick = int(np.argmax(diag))
            else:
                diag[diag <= _DIAG_ZERO] = 0.0
                total = diag.sum()
                if total <= 0.0:   # numerically exhausted kernel
                    raise DomainError("kernel diagonal vanished before rank did")
                cumulative = np.cumsum(diag / total)
                pick = int(np.searchsorted(cumulative, rng.random()))
                pick = min(pick, n - 1)
            chosen.append(pick + 1)
            available[pick] = False
            pivot = kernel[pick, pick]
            kernel = kernel - np.outer(kernel[:, pick], kernel[pick, :]) / pivot
            if remaining > 1:
                live = kernel.diagonal()[available]
                live_sum = float(np.clip(live, 0.0, None).sum())
                if live_sum > 0.0:
                    kernel *= (remaining - 1) / live_sum
        draws.append(tuple(sorted(chosen)))
    return draws


class CountVector:
    """Nonnegative integer counts over d-subsets of {1..n}.

    Stored sparsely: subsets with zero count may be omitted.  At least one
    count must be positive.
    """

    def __init__(self, d, n, u):
        if not (1 <= d <= n):
            raise DimensionError(f"need 1 <= d <= n, got d={d}, n={n}")
        self.d = int(d)
        self.n = int(n)
        valid = set(d_subsets(n, d))
        counts = {}
        for key, value in u.items():
            subset = tuple(sorted(int(i) for i in key))
            if subset not in valid:
                raise DimensionError(f"not a {d}-subset of 1..{n}: {key}")
            if not isinstance(value, (int, np.integer)) or value < 0:
                raise DomainError(f"count for {subset} must be a nonnegative integer")
            if value:
                counts[subset] = counts.get(subset, 0) + int(value)
        if not counts:
            raise DomainError("at least one count must be positive")
        self.u = {s: counts[s] for s in d_subsets(n, d) if s in counts}

    @classmethod
    def from_samples(cls, samples, n):
        samples = list(samples)
        if not samples:
            raise DomainError("no samples given")
        d = len(samples[0])
        counts = {}
        for s in samples:
            key = tuple(sorted(int(i) for i in s))
            counts[key] = counts.get(key, 0) + 1
        return cls(d, n, counts)

    def total(self):
        return sum(self.u.values())

    def count(self, subset):
        return self.u.get(tuple(sorted(int(i) for i in subset)), 0)

    def dense(self, subsets=None):
        """Counts aligned with a subset ordering (default: lexicographic)."""
        if subsets is None:
            subsets = d_subsets(self.n, self.d)
        return np.array([self.u.get(s, 0) for s in subsets], dtype=float)

    def items(self):
        return self.u.items()

    def __repr__(self):
        return f"CountVector(d={self.d}, n={self.n}, N={self.total()})"


class DppModel:
    """A projection kernel bundled with its (lazily computed) pmf."""

    def __init__(self, kernel):
        self.kernel = _as_kernel(kernel)
        self._pmf = None

    @property
    def d(self):
        return self.kernel.d

    @property
    def n(self):
        return self.kernel.n

    def pmf(self):
        if self._pmf is None:
            self._pmf = dpp_pmf(self.kernel)
        return self._pmf

    def correlation(self, j):
        return correlation(self.kernel, j)

    def marginals(self):
        return marginals(self.kernel)

    def sample(self, seed, count):
        return dpp_sample(self.kernel, seed, count)

    def __repr__(self):
        return f"DppModel(n={self.n}, d={self.d})"
