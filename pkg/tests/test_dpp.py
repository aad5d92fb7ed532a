"""Projection DPPs: pmf, correlations, inclusion-exclusion, sampling."""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from grasskit import (CountVector, DppModel, ProjectionMatrix, correlation,
                      dpp_pmf, dpp_sample, marginals, moebius_pmf,
                      plucker_from_basis, projection_from_basis)
from grasskit.errors import DimensionError, DomainError

HALF = Fraction(1, 2)
HALF_PATTERN = np.array([[HALF, 0, HALF, 0], [0, HALF, 0, HALF],
                         [HALF, 0, HALF, 0], [0, HALF, 0, HALF]], dtype=object)
HALF_PMF = {(1, 2): Fraction(1, 4), (1, 3): Fraction(0), (1, 4): Fraction(1, 4),
            (2, 3): Fraction(1, 4), (2, 4): Fraction(0), (3, 4): Fraction(1, 4)}


def test_half_pattern_pmf_frozen():
    pmf = dpp_pmf(ProjectionMatrix(HALF_PATTERN))
    assert pmf == HALF_PMF
    assert sum(pmf.values()) == 1


def test_pmf_is_squared_plucker_ratio(corpus):
    d, n, basis = corpus[5]
    x = plucker_from_basis(basis)
    pmf = dpp_pmf(projection_from_basis(basis))
    total = x.sum_of_squares()
    for subset, value in x.items():
        assert pmf[subset] == Fraction(value * value, 1) / total


def test_pmf_of_rank_zero_kernel():
    zero = ProjectionMatrix(np.zeros((3, 3), dtype=int))
    assert dpp_pmf(zero) == {(): 1}


def test_pmf_enumeration_cap():
    big = ProjectionMatrix(np.eye(30, dtype=int))   # C(30, 30) is fine...
    assert dpp_pmf(big) == {tuple(range(1, 31)): 1}
    rng = np.random.default_rng(0)
    wide = projection_from_basis(rng.normal(size=(10, 25)))
    with pytest.raises(DomainError):
        dpp_pmf(wide)                               # C(25, 10) exceeds the cap


def test_correlation_values():
    p = ProjectionMatrix(HALF_PATTERN)
    assert correlation(p, ()) == 1
    assert correlation(p, (1,)) == HALF
    assert correlation(p, (1, 3)) == 0              # det of the singular block
    assert correlation(p, (1, 2)) == Fraction(1, 4)


def test_correlation_input_validation():
    p = ProjectionMatrix(HALF_PATTERN)
    with pytest.raises(ValueError):
        correlation(p, (1, 1))
    with pytest.raises(IndexError):
        correlation(p, (0, 2))
    with pytest.raises(IndexError):
        correlation(p, (1, 5))


def test_moebius_recovers_pmf_exactly():
    p = ProjectionMatrix(HALF_PATTERN)
    pmf = dpp_pmf(p)
    for subset in pmf:
        assert moebius_pmf(p, subset) == pmf[subset]
    with pytest.raises(DimensionError):
        moebius_pmf(p, (1,))                        # needs |I| = rank


@pytest.mark.parametrize("seed,d,n", [(0, 1, 4), (1, 2, 4), (2, 2, 5), (3, 3, 5)])
def test_moebius_matches_on_random_exact_kernels(seed, d, n):
    rng = np.random.default_rng(seed)
    basis = rng.integers(-4, 5, size=(d, n))
    while np.linalg.matrix_rank(basis.astype(float)) < d:
        basis = rng.integers(-4, 5, size=(d, n))
    p = projection_from_basis(basis)
    pmf = dpp_pmf(p)
    assert sum(pmf.values()) == 1
    for subset in pmf:
        assert moebius_pmf(p, subset) == pmf[subset]


def test_marginals_are_brute_force_inclusion_sums():
    rng = np.random.default_rng(11)
    basis = rng.integers(-4, 5, size=(2, 5))
    p = projection_from_basis(basis)
    pmf = dpp_pmf(p)
    margins = marginals(p)
    for i in range(1, 6):
        bysum = sum(v for s, v in pmf.items() if i in s)
        assert margins[i - 1] == bysum


def test_sampler_is_seed_deterministic():
    p = ProjectionMatrix(HALF_PATTERN)
    first = dpp_sample(p, seed=123, count=50)
    second = dpp_sample(p, seed=123, count=50)
    third = dpp_sample(p, seed=124, count=50)
    assert first == second
    assert first != third


def test_sampler_avoids_zero_probability_subsets():
    p = ProjectionMatrix(HALF_PATTERN)
    draws = dpp_sample(p, seed=5, count=2000)
    assert all(s not in ((1, 3), (2, 4)) for s in draws)
    assert {len(s) for s in draws} == {2}


def test_sampler_frequencies_near_truth():
    p = ProjectionMatrix(HALF_PATTERN)
    draws = dpp_sample(p, seed=5, count=2000)
    counts = CountVector.from_samples(draws, 4)
    tv = 0.5 * sum(abs(counts.count(s) / 2000 - float(v))
                   for s, v in HALF_PMF.items())
    assert tv < 0.05


def test_count_vector_accounting():
    draws = [(1, 2), (1, 2), (3, 4)]
    u = CountVector.from_samples(draws, 4)
    assert u.total() == 3
    assert u.count((1, 2)) == 2
    assert u.count((1, 3)) == 0
    subsets = list(itertools.combinations(range(1, 5), 2))
    assert u.dense(subsets).tolist() == [2, 0, 0, 0, 0, 1]


def test_dpp_model_wrapper():
    model = DppModel(ProjectionMatrix(HALF_PATTERN))
    assert model.pmf() == HALF_PMF
    assert model.marginals()[0] == HALF
    assert model.sample(seed=9, count=10) == dpp_sample(
        ProjectionMatrix(HALF_PATTERN), seed=9, count=10)
