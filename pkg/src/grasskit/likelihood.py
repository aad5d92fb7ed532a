"""Likelihood inference for two subspace models over d-subset counts.

Both models live on the chart A = [Id_d  Y] with Y a d x (n-d) matrix of
nonzero entries, and assign to each d-subset I the probability

    squared  :  x_I^2 / sum_J x_J^2      (the projection-DPP pmf)
    positive :  x_I   / sum_J x_J        (requires all minors positive)

where x_I is the maximal minor of A on columns I.

The squared model only sees Y up to sign flips of whole rows and columns
(2^(n-1) chart points share a pmf).  The flip-invariant coordinates

    alpha     = y_11^2
    beta_j    = y_1j^2                       (2 <= j <= n-d)
    gamma_i   = y_i1^2                       (2 <= i <= d)
    kappa_ij  = y_ij y_i,j+1 y_i+1,j y_i+1,j+1   (adjacent 2x2 products)

separate the flip orbits, and every y_ij is recovered as a signed monomial
in them with half-integer exponents (see ``reparam_invert``).  Fitting
runs multistart first-order ascent in the logarithms of these invariants
(squared model) or directly in Y (positive model), with analytic gradients
through the minors.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .dpp import ENUMERATION_CAP, CountVector
from .errors import (ConvergenceFailure, DimensionError, DomainError,
                     NotInPositiveChart, OutOfTable, ZeroEntry)
from .plucker import d_subsets

# Reference ML-degree constants (counts of complex critical points for
# generic data; shipped data, not recomputed -- certification requires
# homotopy continuation).  Keyed by (d, n) with d <= n - d; entries whose
# published values are unknown or only bounded below are absent.
ML_DEGREES = {
    "squared": {(2, 4): 3, (2, 5): 12, (2, 6): 60, (2, 7): 360,
                (2, 8): 2520, (2, 9): 20160, (3, 6): 552, (3, 7): 73440},
    "positive": {(2, 4): 4, (2, 5): 22, (2, 6): 156, (2, 7): 1368,
                 (2, 8): 14400, (2, 9): 177840, (3, 6): 1937},
}

MODELS = ("squared", "positive")

# Ascent defaults.  GRAD_TOL certifies stationarity of the mean
# log-likelihood; LOG_BOUND on max |log y_ij| cuts off runs racing toward
# the boundary of the chart, while BOUNDARY_LOG reclassifies a finished
# run as a boundary case: past that magnitude the model puts some subset
# below ~1e-21 probability, which no interior optimum of count data does.
GRAD_TOL = 1e-8
LOG_BOUND = 80.0
BOUNDARY_LOG = 25.0
_ARMIJO_C = 1e-4
_SHRINK = 0.5
# First-order ascent can need arbitrarily many steps in an ill-conditioned
# basin; runs that stall short of GRAD_TOL get a damped-Newton finish with
# a differenced Hessian before they are written off.
_NEWTON_FINISH_ITER = 40


def ml_degree(model, d, n):
    """Stored reference ML degree, using the d <-> n-d model isomorphism."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    key = (min(d, n - d), n)
    table = ML_DEGREES[model]
    if key not in table:
        raise OutOfTable(f"no stored ML degree for model={model}, d={d}, n={n}")
    return table[key]


class ChartPoint:
    """A d x (n-d) float matrix Y with all entries nonzero."""

    def __init__(self, y):
        arr = np.asarray(y, dtype=float)
        if arr.ndim != 2 or 0 in arr.shape:
            raise DimensionError(f"Y must be a nonempty 2-d matrix, got shape {arr.shape}")
        if np.any(arr == 0.0) or not np.all(np.isfinite(arr)):
            raise ZeroEntry("chart entries must be nonzero finite floats")
        self.y = arr
        self.y.setflags(write=False)

    @property
    def d(self):
        return self.y.shape[0]

    @property
    def n(self):
        return self.y.shape[0] + self.y.shape[1]

    def matrix(self):
        return np.hstack([np.eye(self.d), self.y])

    def minors(self):
        return chart_minors(self.y)

    def __repr__(self):
        return f"ChartPoint(d={self.d}, n={self.n})"


class ReparamPoint:
    """Flip-invariant coordinates (alpha, beta, gamma, kappa)."""

    def __init__(self, alpha, beta, gamma, kappa):
        self.alpha = float(alpha)
        self.beta = np.asarray(beta, dtype=float).reshape(-1)
        self.gamma = np.asarray(gamma, dtype=float).reshape(-1)
        d = self.gamma.size + 1
        m = self.beta.size + 1
        self.kappa = np.asarray(kappa, dtype=float).reshape(d - 1, m - 1)
        if self.alpha <= 0 or np.any(self.beta <= 0) or np.any(self.gamma <= 0):
            raise DomainError("alpha, beta, gamma must be strictly positive")
        if np.any(self.kappa == 0) or not np.all(np.isfinite(self.kappa)):
            raise DomainError("kappa entries must be nonzero finite floats")

    @property
    def d(self):
        return self.gamma.size + 1

    @property
    def n(self):
        return self.gamma.size + 1 + self.beta.size + 1

    def as_vector(self):
        """Flat layout (alpha, beta_2.., gamma_2.., kappa row-major)."""
        return np.concatenate([[self.alpha], self.beta, self.gamma,
                               self.kappa.ravel()])

    def close_to(self, other, rel_tol=1e-10):
        a, b = self.as_vector(), other.as_vector()
        return a.shape == b.shape and bool(
            np.allclose(a, b, rtol=rel_tol, atol=0.0))

    def __repr__(self):
        return f"ReparamPoint(d={self.d}, n={self.n})"


@dataclass
class FitResult:
    """Outcome of a multistart fit.

    ``grad_norm`` is the Euclidean norm of the mean-log-likelihood gradient
    at the estimate; when ``boundary`` is true the run diverged toward the
    chart boundary and no stationarity is claimed (the estimate records the
    last iterate's invariants for diagnosis).  ``loglik`` is the raw
    sum u_I log pmf_hat(I); ``distinct_optima`` lists one (pmf, loglik)
    pair per stationary cluster, best first.
    """
    model: str
    estimate: "ReparamPoint | None"
    pmf_hat: dict
    loglik: float
    grad_norm: float
    restarts_used: int
    distinct_optima: list = field(default_factory=list)
    boundary: bool = False
    diagnostics: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# chart minors and model pmfs


def _as_chart_array(y):
    if isinstance(y, ChartPoint):
        return np.array(y.y, dtype=float)
    arr = np.asarray(y, dtype=float)
    if arr.ndim != 2 or 0 in arr.shape:
        raise DimensionError(f"Y must be a nonempty 2-d matrix, got shape {arr.shape}")
    return arr


def _column_sets(d, n):
    """(subset, 0-based column tuple) pairs in lexicographic order."""
    return [(s, tuple(i - 1 for i in s)) for s in d_subsets(n, d)]


def chart_minors(y):
    """All maximal minors of [Id_d  Y] as a subset-keyed map of floats."""
    arr = _as_chart_array(y)
    d, m = arr.shape
    a = np.hstack([np.eye(d), arr])
    out = {}
    for subset, cols in _column_sets(d, d + m):
        out[subset] = float(np.linalg.det(a[:, cols])) if d > 1 else float(a[0, cols[0]])
    return out


def model_pmf(y, model="squared"):
    """Probability map of a chart point under either model."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    minors = chart_minors(y)
    if model == "squared":
        total = sum(v * v for v in minors.values())
        return {s: v * v / total for s, v in minors.items()}
    worst = min(minors.values())
    if worst <= 0.0:
        bad = next(s for s, v in minors.items() if v == worst)
        raise NotInPositiveChart(f"minor at {bad} is {worst:.6g} <= 0")
    total = sum(minors.values())
    return {s: v / total for s, v in minors.items()}


def loglik(u, pmf):
    """L = sum_I u_I log pmf(I); float('-inf') when a positive count sits
    on a zero-probability subset."""
    items = u.items() if isinstance(u, CountVector) else dict(u).items()
    total = 0.0
    for subset, count in items:
        if count == 0:
            continue
        p = pmf.get(tuple(subset), 0)
        if p <= 0:
            return float("-inf")
        total += count * math.log(p)
    return total


# ---------------------------------------------------------------------------
# the flip-invariant reparametrization


def _param_layout(d, m):
    """Index layout of the log-parameter vector for a d x m chart."""
    n_beta = m - 1
    n_gamma = d - 1
    p = 1 + n_beta + n_gamma + (d - 1) * (m - 1)
    beta_at = lambda j: 1 + (j - 2)            # 2 <= j <= m
    gamma_at = lambda i: 1 + n_beta + (i - 2)  # 2 <= i <= d
    kappa_at = lambda k, l: 1 + n_beta + n_gamma + (k - 1) * (m - 1) + (l - 1)
    return p, beta_at, gamma_at, kappa_at


def _exponent_tensor(d, m):
    """E with log|y_ij| = sum_p E[i-1, j-1, p] * theta[p].

    First row and column are square roots of single invariants; interior
    entries are the signed monomials with half-integer exponents in alpha,
    beta_j, gamma_i and adjacent-product exponents +-1 in kappa.
    """
    p, beta_at, gamma_at, kappa_at = _param_layout(d, m)
    e = np.zeros((d, m, p))
    e[0, 0, 0] = 0.5
    for j in range(2, m + 1):
        e[0, j - 1, beta_at(j)] = 0.5
    for i in range(2, d + 1):
        e[i - 1, 0, gamma_at(i)] = 0.5
    for i in range(2, d + 1):
        for j in range(2, m + 1):
            e[i - 1, j - 1, 0] = 0.5 * (-1) ** (i + j + 1)
            e[i - 1, j - 1, beta_at(j)] = 0.5 * (-1) ** (i + 1)
            e[i - 1, j - 1, gamma_at(i)] = 0.5 * (-1) ** (j + 1)
            for k in range(1, i):
                for l in range(1, j):
                    e[i - 1, j - 1, kappa_at(k, l)] = float((-1) ** (i + j + k + l))
    return e


def _sign_matrix(signs, d, m):
    """Entry signs of Y implied by the kappa sign pattern (first row and
    column positive)."""
    s = np.ones((d, m))
    if d > 1 and m > 1:
        s[1:, 1:] = np.cumprod(np.cumprod(signs, axis=0), axis=1)
    return s


def _theta_to_y(theta, signs, d, m, exponents):
    logmag = np.tensordot(exponents, theta, axes=([2], [0]))
    return _sign_matrix(signs, d, m) * np.exp(logmag)


def _encode(point):
    """ReparamPoint -> (log-parameter vector, kappa sign pattern)."""
    theta = np.log(np.concatenate([[point.alpha], point.beta, point.gamma,
                                   np.abs(point.kappa).ravel()]))
    return theta, np.sign(point.kappa)


def _decode(theta, signs, d, m):
    p, beta_at, gamma_at, kappa_at = _param_layout(d, m)
    values = np.exp(theta)
    alpha = values[0]
    beta = values[1:m]
    gamma = values[m:m + d - 1]
    kappa = (signs * values[m + d - 1:].reshape(d - 1, m - 1)
             if d > 1 and m > 1 else np.zeros((d - 1, m - 1)))
    return ReparamPoint(alpha, beta, gamma, kappa)


def reparam_forward(y):
    """Chart point -> flip-invariant coordinates (squares and adjacent
    2x2 entry products).  Zero entries raise ZeroEntry."""
    arr = _as_chart_array(y)
    if np.any(arr == 0.0):
        raise ZeroEntry("chart entries must be nonzero")
    d, m = arr.shape
    alpha = arr[0, 0] ** 2
    beta = arr[0, 1:] ** 2
    gamma = arr[1:, 0] ** 2
    kappa = (arr[:-1, :-1] * arr[:-1, 1:] * arr[1:, :-1] * arr[1:, 1:]
             if d > 1 and m > 1 else np.zeros((d - 1, m - 1)))
    return ReparamPoint(alpha, beta, gamma, kappa)


def reparam_invert(point):
    """Flip-invariant coordinates -> the chart point whose first row and
    column are positive square roots; interior entries are the signed
    monomials (e.g. y_22 = kappa_11 / sqrt(alpha beta_2 gamma_2))."""
    if not isinstance(point, ReparamPoint):
        raise TypeError("reparam_invert expects a ReparamPoint")
    d, m = point.d, point.n - point.d
    theta, signs = _encode(point)
    return ChartPoint(_theta_to_y(theta, signs, d, m, _exponent_tensor(d, m)))


# ---------------------------------------------------------------------------
# analytic gradients through the minors


def _batched_minors_cofactors(a, col_sets, d):
    """Minor values and cofactor matrices for every column set at once."""
    mats = np.stack([a[:, cols] for _, cols in col_sets])
    if d == 1:
        x = mats[:, 0, 0].copy()
        cof = np.ones((len(col_sets), 1, 1))
        return x, cof
    x = np.linalg.det(mats)
    t = len(col_sets)
    cof = np.empty((t, d, d))
    rows = np.arange(d)
    for r in range(d):
        keep_r = rows != r
        for c in range(d):
            keep_c = rows != c
            sub = mats[:, keep_r][:, :, keep_c]
            sign = -1.0 if (r + c) % 2 else 1.0
            cof[:, r, c] = sign * (np.linalg.det(sub) if d > 2 else sub[:, 0, 0])
    return x, cof


def _scatter_dy(weights, cof, col_sets, d, m):
    """d(objective)/dY from per-minor weights: chain rule through det."""
    da = np.zeros((d, d + m))
    for t, (_, cols) in enumerate(col_sets):
        da[:, cols] += weights[t] * cof[t]
    return da[:, d:]


def _squared_value_grad(theta, signs, ctx):
    """Mean log-likelihood and its gradient in log-invariant coordinates.

    Overflowed trial points come back non-finite (the line search rejects
    them), so float warnings are silenced here rather than raised.
    """
    with np.errstate(all="ignore"):
        y = _theta_to_y(theta, signs, ctx["d"], ctx["m"], ctx["E"])
        a = np.hstack([np.eye(ctx["d"]), y])
        x, cof = _batched_minors_cofactors(a, ctx["cols"], ctx["d"])
        supp = ctx["supp"]
        if np.any(x[supp] == 0.0) or not np.all(np.isfinite(x)):
            return float("-inf"), None
        ss = float(np.dot(x, x))
        if ss <= 0.0:
            return float("-inf"), None
        u = ctx["u"]
        n_total = ctx["N"]
        f = float(2.0 * np.dot(u[supp], np.log(np.abs(x[supp]))) / n_total
                  - math.log(ss))
        w = -2.0 * x / ss
        w[supp] += 2.0 * u[supp] / (n_total * x[supp])
        dy = _scatter_dy(w, cof, ctx["cols"], ctx["d"], ctx["m"])
        grad = np.tensordot(dy * y, ctx["E"], axes=([0, 1], [0, 1]))
    return f, grad


def _positive_value_grad(yflat, ctx):
    """Mean log-likelihood and gradient in raw chart entries; -inf off the
    positive chart (line search then rejects the step)."""
    with np.errstate(all="ignore"):
        y = yflat.reshape(ctx["d"], ctx["m"])
        a = np.hstack([np.eye(ctx["d"]), y])
        x, cof = _batched_minors_cofactors(a, ctx["cols"], ctx["d"])
        if np.min(x) <= 0.0 or not np.all(np.isfinite(x)):
            return float("-inf"), None
        s = float(np.sum(x))
        u = ctx["u"]
        n_total = ctx["N"]
        f = float(np.dot(u, np.log(x)) / n_total - math.log(s))
        w = u / (n_total * x) - 1.0 / s
        dy = _scatter_dy(w, cof, ctx["cols"], ctx["d"], ctx["m"])
    return f, dy.ravel()


# ---------------------------------------------------------------------------
# first-order ascent: monotone Armijo backtracking with spectral
# (Barzilai-Borwein) initial steps, plus a polish phase for the last
# decade the objective's float resolution cannot certify


def _bb_step(dz, dg, fallback):
    """Barzilai-Borwein step from the last displacement/gradient change.

    For a concave objective dz.dg < 0; the safeguarded quotient
    |dz.dz / dz.dg| approximates the inverse curvature along the step and
    handles ill-conditioned basins where a unit step zig-zags.
    """
    denom = float(np.dot(dz, dg))
    if denom == 0.0 or not np.isfinite(denom):
        return fallback
    step = abs(float(np.dot(dz, dz)) / denom)
    if not np.isfinite(step):
        return fallback
    return min(max(step, 1e-10), 1e6)


def _ascend(value_grad, z0, is_boundary, gtol, max_iter, polish_iter):
    z = np.array(z0, dtype=float)
    f, g = value_grad(z)
    if not np.isfinite(f):
        return {"status": "infeasible", "z": z, "f": f, "grad_norm": float("inf")}
    t_init = 1.0
    t_last = 1.0
    for _ in range(max_iter):
        if is_boundary(z):
            return {"status": "boundary", "z": z, "f": f,
                    "grad_norm": float(np.linalg.norm(g))}
        gn = float(np.linalg.norm(g))
        if gn <= gtol:
            return {"status": "converged", "z": z, "f": f, "grad_norm": gn}
        t = t_init
        f_floor = 1e-14 * max(1.0, abs(f))
        accepted = False
        while t * gn * gn >= f_floor and t > 1e-18:
            zt = z + t * g
            ft, gt = value_grad(zt)
            if np.isfinite(ft) and ft >= f + _ARMIJO_C * t * gn * gn:
                t_init = _bb_step(zt - z, gt - g, fallback=2.0 * t)
                z, f, g = zt, ft, gt
                t_last = t
                accepted = True
                break
            t *= _SHRINK
        if not accepted:
            # The sufficient-increase test fell below the resolution of f:
            # finish with spectral gradient steps, shrinking on
            # gradient-norm stagnation (still first-order, still monotone
            # within float noise).
            return _polish(value_grad, z, f, g, is_boundary, gtol,
                           polish_iter, min(t_last, t_init))
    return _newton_finish(value_grad, z, f, g, is_boundary, gtol, "maxiter")


def _polish(value_grad, z, f, g, is_boundary, gtol, polish_iter, step):
    gn = float(np.linalg.norm(g))
    stagnant = 0
    for _ in range(polish_iter):
        if gn <= gtol:
            return {"status": "converged", "z": z, "f": f, "grad_norm": gn}
        if is_boundary(z):
            return {"status": "boundary", "z": z, "f": f, "grad_norm": gn}
        zt = z + step * g
        ft, gt = value_grad(zt)
        if not np.isfinite(ft) or ft < f - 1e-12 * max(1.0, abs(f)):
            step *= 0.5     # overshot: a real decrease, not just noise
            if step < 1e-18:
                break
            continue
        gnt = float(np.linalg.norm(gt))
        if gnt >= gn:
            stagnant += 1
            if stagnant >= 5:
                step *= 0.5
                stagnant = 0
                if step < 1e-18:
                    break
        else:
            stagnant = 0
            step = _bb_step(zt - z, gt - g, fallback=step)
        z, f, g, gn = zt, ft, gt, gnt
    return _newton_finish(value_grad, z, f, g, is_boundary, gtol, "stalled")


def _fd_hessian(value_grad, z, g, step=1e-6):
    """Symmetrized forward differences of the analytic gradient."""
    size = z.size
    hess = np.empty((size, size))
    for j in range(size):
        h = step * max(1.0, abs(z[j]))
        zj = z.copy()
        zj[j] += h
        _, gj = value_grad(zj)
        if gj is None or not np.all(np.isfinite(gj)):
            raise np.linalg.LinAlgError("gradient unavailable for differencing")
        hess[:, j] = (gj - g) / h
    return 0.5 * (hess + hess.T)


def _newton_finish(value_grad, z, f, g, is_boundary, gtol, fail_status):
    """Second-order finish for ascents that stall short of gtol.

    Steps are accepted only while they keep the ascent monotone within
    float noise and either raise f or shrink the gradient, so the finish
    cannot wander; directions are used only when they point uphill.
    """
    gn = float(np.linalg.norm(g))
    for _ in range(_NEWTON_FINISH_ITER):
        if gn <= gtol:
            return {"status": "converged", "z": z, "f": f, "grad_norm": gn}
        if is_boundary(z):
            return {"status": "boundary", "z": z, "f": f, "grad_norm": gn}
        try:
            hess = _fd_hessian(value_grad, z, g)
            direction = np.linalg.solve(hess, -g)
        except np.linalg.LinAlgError:
            break
        if (not np.all(np.isfinite(direction))
                or float(np.dot(direction, g)) <= 0.0):
            break
        t = 1.0
        accepted = False
        f_floor = 1e-12 * max(1.0, abs(f))
        for _ in range(25):
            zt = z + t * direction
            ft, gt = value_grad(zt)
            if np.isfinite(ft) and ft >= f - f_floor:
                gnt = float(np.linalg.norm(gt))
                if gnt < gn or ft > f + f_floor:
                    z, f, g, gn = zt, ft, gt, gnt
                    accepted = True
                    break
            t *= 0.5
        if not accepted:
            break
    if gn <= gtol:
        return {"status": "converged", "z": z, "f": f, "grad_norm": gn}
    return {"status": fail_status, "z": z, "f": f, "grad_norm": gn}


# ---------------------------------------------------------------------------
# multistart fitting


def _feasible_positive_start(rng, d, m):
    """A chart point with every maximal minor positive: columns of a
    generalized Vandermonde matrix at increasing positive nodes."""
    n = d + m
    nodes = np.sort(rng.uniform(0.3, 3.0, size=n))
    while np.min(np.diff(nodes)) < 1e-3:
        nodes = np.sort(rng.uniform(0.3, 3.0, size=n))
    v = np.vander(nodes, N=d, increasing=True).T   # rows 1, t, t^2, ...
    return np.linalg.solve(v[:, :d], v[:, d:])


def _gaussian_start(rng, d, m):
    for _ in range(200):
        y = rng.standard_normal((d, m))
        if np.min(np.abs(y)) >= 1e-3:
            return y
    raise ConvergenceFailure("could not draw a nondegenerate start")


def mle_fit(u, model="squared", restarts=20, seed=0, gtol=GRAD_TOL,
            max_iter=2000, polish_iter=5000, cluster_radius=1e-5):
    """Multistart maximum-likelihood fit of either model to subset counts.

    Each restart runs first-order ascent of the mean log-likelihood with
    Armijo backtracking (squared model: in log-invariant coordinates with
    the kappa sign pattern frozen per start; positive model: in raw chart
    entries, infeasible steps rejected), with a damped-Newton finish for
    runs that stall short of ``gtol``.  Stationary points are clustered by
    max-distance ``cluster_radius`` in pmf space.  Raises
    ConvergenceFailure when no restart converges or hits the boundary, or
    when the best likelihood seen belongs to a run that never certified --
    reporting a dominated point as the optimum would be a lie.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    if not isinstance(u, CountVector):
        raise TypeError("mle_fit expects a CountVector")
    d, n = u.d, u.n
    m = n - d
    if m < 1:
        raise DimensionError("the chart needs n > d")
    if math.comb(n, d) > ENUMERATION_CAP:
        raise DomainError("subset count exceeds the enumeration cap")
    col_sets = _column_sets(d, n)
    ctx = {
        "d": d, "m": m, "cols": col_sets,
        "u": np.array([u.count(s) for s, _ in col_sets], dtype=float),
        "N": float(u.total()),
    }
    ctx["supp"] = ctx["u"] > 0
    exponents = _exponent_tensor(d, m)
    ctx["E"] = exponents
    rng = np.random.default_rng(seed)
    runs = []
    for index in range(int(restarts)):
        if model == "squared":
            y0 = _gaussian_start(rng, d, m)
            theta0, signs = _encode(reparam_forward(y0))

            def value_grad(z, signs=signs):
                return _squared_value_grad(z, signs, ctx)

            def is_boundary(z, signs=signs):
                logmag = np.tensordot(exponents, z, axes=([2], [0]))
                return bool(np.max(np.abs(logmag)) > LOG_BOUND)

            outcome = _ascend(value_grad, theta0, is_boundary, gtol,
                              max_iter, polish_iter)
            if outcome["status"] in ("converged", "boundary", "stalled", "maxiter"):
                y_hat = _theta_to_y(outcome["z"], signs, d, m, exponents)
                outcome["point"] = _decode(outcome["z"], signs, d, m)
                outcome["pmf"] = model_pmf(y_hat, "squared")
                if (outcome["status"] == "converged"
                        and np.max(np.abs(outcome["z"])) > BOUNDARY_LOG):
                    # stationary within tolerance, but only because the
                    # likelihood plateaus while the log-coordinates run
                    # off: a boundary supremum, not an interior optimum
                    outcome["status"] = "boundary"
        else:
            y0 = _feasible_positive_start(rng, d, m)
            y0 = y0 * np.exp(rng.uniform(-0.05, 0.05, size=y0.shape))

            def value_grad(z):
                return _positive_value_grad(z, ctx)

            def is_boundary(z):
                with np.errstate(divide="ignore"):
                    mags = np.abs(z[z != 0.0])
                if mags.size == 0:
                    return True
                return bool(np.max(np.abs(np.log(mags))) > LOG_BOUND)

            outcome = _ascend(value_grad, y0.ravel(), is_boundary, gtol,
                              max_iter, polish_iter)
            if outcome["status"] in ("converged", "boundary", "stalled", "maxiter"):
                y_hat = outcome["z"].reshape(d, m)
                try:
                    outcome["point"] = reparam_forward(y_hat)
                except ZeroEntry:
                    outcome["point"] = None
                try:
                    outcome["pmf"] = model_pmf(y_hat, "positive")
                except NotInPositiveChart:
                    outcome["status"] = "infeasible"
                if outcome["status"] == "converged":
                    mags = np.abs(outcome["z"][outcome["z"] != 0.0])
                    if (mags.size == 0
                            or np.max(np.abs(np.log(mags))) > BOUNDARY_LOG):
                        outcome["status"] = "boundary"
        outcome["restart"] = index
        runs.append(outcome)

    converged = [r for r in runs if r["status"] == "converged"]
    boundary = [r for r in runs if r["status"] == "boundary"]
    statuses = {}
    for r in runs:
        statuses[r["status"]] = statuses.get(r["status"], 0) + 1
    diagnostics = {"statuses": statuses,
                   "best_grad_norm": min((r["grad_norm"] for r in runs
                                          if np.isfinite(r["grad_norm"])),
                                         default=float("inf"))}

    def pmf_vector(run):
        return np.array([run["pmf"][s] for s, _ in col_sets])

    def raw_loglik(run):
        return loglik(u, run["pmf"])

    boundary.sort(key=lambda r: -raw_loglik(r))
    best_interior = -math.inf
    if converged:
        best_interior = max(raw_loglik(r) for r in converged)
    best_reportable = best_interior
    if boundary:
        best_reportable = max(best_reportable, raw_loglik(boundary[0]))
    stuck = [r for r in runs
             if r["status"] in ("maxiter", "stalled") and r.get("pmf")]
    if stuck:
        best_stuck = max(raw_loglik(r) for r in stuck)
        if best_stuck > best_reportable + 1e-7 * max(1.0, abs(best_reportable)):
            # refusing is better than certifying a dominated point as the
            # optimum: some run found strictly higher likelihood but never
            # became stationary to tolerance
            diagnostics["uncertified_loglik"] = best_stuck
            raise ConvergenceFailure(
                f"an unconverged run dominates every certified optimum: {diagnostics}")
    if boundary and raw_loglik(boundary[0]) > best_interior:
        # a boundary supremum dominates every interior stationary point
        best = boundary[0]
        return FitResult(
            model=model,
            estimate=best.get("point"),
            pmf_hat=dict(best["pmf"]),
            loglik=raw_loglik(best),
            grad_norm=best["grad_norm"],
            restarts_used=int(restarts),
            distinct_optima=[],
            boundary=True,
            diagnostics=diagnostics,
        )
    if converged:
        # deterministic merge: sort by loglik descending, then by the pmf
        # vector lexicographically
        converged.sort(key=lambda r: (-raw_loglik(r), tuple(pmf_vector(r))))
        clusters = []
        for run in converged:
            vec = pmf_vector(run)
            for rep, rep_vec in clusters:
                if np.max(np.abs(vec - rep_vec)) <= cluster_radius:
                    break
            else:
                clusters.append((run, vec))
        best = clusters[0][0]
        return FitResult(
            model=model,
            estimate=best.get("point"),
            pmf_hat=dict(best["pmf"]),
            loglik=raw_loglik(best),
            grad_norm=best["grad_norm"],
            restarts_used=int(restarts),
            distinct_optima=[(dict(run["pmf"]), raw_loglik(run))
                             for run, _ in clusters],
            boundary=False,
            diagnostics=diagnostics,
        )
    raise ConvergenceFailure(f"no restart reached stationarity: {diagnostics}")


def numeric_gradient(func, z, step=1e-6):
    """Central finite differences of a scalar function (testing aid)."""
    z = np.asarray(z, dtype=float)
    grad = np.zeros_like(z)
    for i in range(z.size):
        forward = z.copy()
        backward = z.copy()
        forward.flat[i] += step
        backward.flat[i] -= step
        grad.flat[i] = (func(forward) - func(backward)) / (2 * step)
    return grad
