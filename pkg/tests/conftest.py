"""Shared fixtures: a reproducible corpus of random full-rank integer bases."""

import numpy as np
import pytest

CORPUS_SEED = 20240613
CORPUS_SIZE = 200


def random_basis(rng, d, n, low=-5, high=5):
    """Full-rank d x n integer matrix with entries in [low, high]."""
    while True:
        basis = rng.integers(low, high + 1, size=(d, n))
        if np.linalg.matrix_rank(basis.astype(float)) == d:
            return basis


@pytest.fixture(scope="session")
def corpus():
    """200 bases cycling through d in {1,2,3} and n in {4,...,7} with d < n."""
    rng = np.random.default_rng(CORPUS_SEED)
    shapes = [(d, n) for d in (1, 2, 3) for n in range(4, 8)]
    return [(d, n, random_basis(rng, d, n))
            for k in range(CORPUS_SIZE)
            for d, n in [shapes[k % len(shapes)]]]


def tv_distance(p, q):
    """Total-variation distance between two pmfs over the union of keys."""
    keys = set(p) | set(q)
    return 0.5 * sum(abs(float(p.get(k, 0)) - float(q.get(k, 0))) for k in keys)
