"""Fit subset-frequency models to sampled data and read the diagnostics.

Two models over the 2-subsets of {1..5}: squared minors of a chart matrix
(normalized), and raw minors restricted to the all-positive chart.  Both
are fit by multistart gradient ascent in a flip-invariant parametrization.
"""

import numpy as np

from grasskit import (CountVector, dpp_pmf, dpp_sample, ml_degree, mle_fit,
                      model_pmf, projection_from_basis, reparam_forward,
                      reparam_invert)

# -- simulate: draw 10_000 subsets from a known kernel --------------------------

basis = np.array([[1, 2, -1, 0, 1],
                  [0, 1, 1, 3, -2]])     # generic: every maximal minor nonzero
kernel = projection_from_basis(basis)
truth = {s: float(v) for s, v in dpp_pmf(kernel).items()}
draws = dpp_sample(kernel, seed=7, count=10_000)
data = CountVector.from_samples(draws, 5)
print("simulated", data.total(), "draws over", len(truth), "subsets")

# -- fit the squared model ------------------------------------------------------

fit = mle_fit(data, model="squared", restarts=40, seed=1)
print("status: boundary =", fit.boundary,
      " gradient norm = %.2e" % fit.grad_norm)
tv = 0.5 * sum(abs(fit.pmf_hat[s] - truth[s]) for s in truth)
print("total variation between fit and truth: %.4f" % tv)
print("stationary clusters found:", len(fit.distinct_optima),
      " (algebraic bound:", ml_degree("squared", 2, 5), "complex points)")

# -- the parametrization under the hood ----------------------------------------

# Squares kill signs, so the parameters are sign-free combinations: one
# corner square, squared first row/column, and adjacent 2x2 products.
y = np.array([[2.0, 3.0], [5.0, 7.0]])
point = reparam_forward(y)
print("alpha =", point.alpha, " beta =", point.beta,
      " gamma =", point.gamma, " kappa =", point.kappa.ravel())
back = reparam_invert(point)
print("invert -> forward is the identity:",
      reparam_forward(back.y).close_to(point))

# Any pattern of sign flips on y leaves the model untouched.
flipped = y * np.array([[1.0, -1.0]])
same = model_pmf(flipped, "squared") == model_pmf(y, "squared")
print("pmf invariant under a column sign flip:", same)

# -- the positive model ---------------------------------------------------------

# The positive model keeps the minors themselves (no squares), so it only
# covers pmfs reachable with every minor positive.  Vandermonde frames are
# a classical source of such points.
nodes = np.array([0.5, 1.0, 1.6, 2.3, 3.1])
frame = np.vander(nodes, 2, increasing=True).T
y_pos = np.linalg.solve(frame[:, :2], frame[:, 2:])
target = model_pmf(y_pos, model="positive")
rng = np.random.default_rng(11)
subsets = list(target)
counts = rng.multinomial(10_000, [target[s] for s in subsets])
pos_data = CountVector(2, 5, dict(zip(subsets, (int(c) for c in counts))))

pos = mle_fit(pos_data, model="positive", restarts=40, seed=2)
tv_pos = 0.5 * sum(abs(pos.pmf_hat[s] - target[s]) for s in subsets)
print("positive-model fit: boundary =", pos.boundary,
      " gradient norm = %.2e" % pos.grad_norm,
      " TV to truth = %.4f" % tv_pos)
