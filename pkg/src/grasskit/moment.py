"""The moment map of a subspace, in both coordinate systems.

From Pluecker coordinates:   z_i = sum_{I containing i} x_I^2 / sum_J x_J^2.
From the projector:          z   = diag(P).

Both land in the hypersimplex (coordinates in [0,1] summing to d) and,
more precisely, in the convex hull of the 0/1 indicator vectors of the
nonzero Pluecker support.  Hull membership is certified exactly by a
phase-1 simplex over the rationals (Bland's rule, so no cycling), which
removes any tolerance ambiguity from the containment statements.
"""

from fractions import Fraction

import numpy as np

from .errors import DimensionError, DomainError
from .plucker import PluckerVector
from .projector import ProjectionMatrix


class MomentVector:
    """A point of the hypersimplex: n coordinates in [0,1] summing to d."""

    def __init__(self, z, tol=1e-7):
        values = list(z)
        if not values:
            raise DimensionError("moment vector needs at least one coordinate")
        exact = all(isinstance(v, (int, np.integer, Fraction)) for v in values)
        if exact:
            values = [Fraction(v, 1) for v in values]
            total = sum(values)
            if total.denominator != 1:
                raise DomainError(f"coordinates sum to {total}, not an integer")
            if any(v < 0 or v > 1 for v in values):
                raise DomainError("coordinates must lie in [0, 1]")
            self.d = int(total)
        else:
            values = [float(v) for v in values]
            total = sum(values)
            if abs(total - round(total)) > tol:
                raise DomainError(f"coordinates sum to {total}, not an integer")
            if any(v < -tol or v > 1 + tol for v in values):
                raise DomainError("coordinates must lie in [0, 1]")
            self.d = int(round(total))
        self.exact = exact
        self.z = tuple(values)
        self.n = len(values)

    def vector(self):
        return np.array(self.z, dtype=object if self.exact else float)

    def __iter__(self):
        return iter(self.z)

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"MomentVector(n={self.n}, d={self.d}, {kind})"


def moment_map(x):
    """z_i = sum of squared coordinates over subsets containing i, over the
    total sum of squares.  Scale-invariant in x."""
    if not isinstance(x, PluckerVector):
        raise TypeError("moment_map expects a PluckerVector")
    total = x.sum_of_squares()
    zero = 0 if x.exact else 0.0
    sums = [zero] * x.n
    for subset, value in x.items():
        for i in subset:
            sums[i - 1] = sums[i - 1] + value * value
    if x.exact:
        return MomentVector([Fraction(s, 1) / total for s in sums])
    return MomentVector([s / total for s in sums])


def moment_from_projection(p):
    """The diagonal of the projector (same point as moment_map)."""
    if not isinstance(p, ProjectionMatrix):
        p = ProjectionMatrix(p)
    return MomentVector(list(p.diagonal()))


def hypersimplex_contains(z, d, tol=1e-9):
    """Is z in [0,1]^n with coordinate sum d?  Exact for rational input."""
    values = list(z)
    exact = all(isinstance(v, (int, np.integer, Fraction)) for v in values)
    if exact:
        return all(0 <= v <= 1 for v in values) and sum(values) == d
    values = [float(v) for v in values]
    return (all(-tol <= v <= 1 + tol for v in values)
            and abs(sum(values) - d) <= max(tol * max(d, 1), tol))


def matroid_polytope_vertices(x, rel_tol=1e-9):
    """Indicator vectors e_I over the nonzero Pluecker support of x.

    Exact nonzero test in the exact regime; entries below
    rel_tol * max|x| count as zero in the float regime.
    """
    if not isinstance(x, PluckerVector):
        raise TypeError("matroid_polytope_vertices expects a PluckerVector")
    if x.exact:
        support = [s for s, v in x.items() if v != 0]
    else:
        cutoff = rel_tol * max(abs(v) for v in x.coords.values())
        support = [s for s, v in x.items() if abs(v) > cutoff]
    vertices = set()
    for subset in support:
        vertex = [0] * x.n
        for i in subset:
            vertex[i - 1] = 1
        vertices.add(tuple(vertex))
    return vertices


# ---------------------------------------------------------------------------
# exact linear feasibility (phase-1 simplex over the rationals)


def _phase1_feasible(columns, target):
    """Does target lie in the cone {sum lambda_j columns_j : lambda >= 0}?

    Exact phase-1 simplex with Bland's anti-cycling rule.  ``columns`` is a
    list of equal-length rational vectors; returns True/False.
    """
    rows = len(target)
    ncols = len(columns)
    table = [[Fraction(columns[j][i]) for j in range(ncols)] for i in range(rows)]
    rhs = [Fraction(v) for v in target]
    for i in range(rows):
        if rhs[i] < 0:
            table[i] = [-v for v in table[i]]
            rhs[i] = -rhs[i]
    # widen with artificial identity columns; minimize their sum
    for i in range(rows):
        table[i].extend(Fraction(int(i == j)) for j in range(rows))
    costs = [Fraction(0)] * ncols + [Fraction(1)] * rows
    basis = list(range(ncols, ncols + rows))
    while True:
        duals = [costs[basis[i]] for i in range(rows)]
        entering = -1
        for j in range(ncols + rows):
            reduced = costs[j] - sum(duals[i] * table[i][j] for i in range(rows))
            if reduced < 0:
                entering = j     # Bland: first improving column
                break
        if entering < 0:
            break
        leaving = -1
        best = None
        for i in range(rows):
            if table[i][entering] > 0:
                ratio = rhs[i] / table[i][entering]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving < 0:
            raise ArithmeticError("phase-1 problem cannot be unbounded")
        pivot = table[leaving][entering]
        table[leaving] = [v / pivot for v in table[leaving]]
        rhs[leaving] /= pivot
        for i in range(rows):
            if i != leaving and table[i][entering]:
                factor = table[i][entering]
                table[i] = [a - factor * b for a, b in zip(table[i], table[leaving])]
                rhs[i] -= factor * rhs[leaving]
        basis[leaving] = entering
    objective = sum(costs[basis[i]] * rhs[i] for i in range(rows))
    return objective == 0


def in_convex_hull(z, vertices):
    """Exact test: is z a convex combination of the given vertices?

    Inputs are rationalized exactly (floats convert by their binary value),
    so the certificate has no tolerance in it.
    """
    vertices = [tuple(v) for v in vertices]
    if not vertices:
        return False
    point = [Fraction(v) for v in z]
    n = len(point)
    if any(len(v) != n for v in vertices):
        raise DimensionError("vertex length does not match the point")
    # homogenize: append the convexity row sum(lambda) = 1
    columns = [[Fraction(v[i]) for i in range(n)] + [Fraction(1)] for v in vertices]
    return _phase1_feasible(columns, point + [Fraction(1)])


def in_matroid_polytope(x, z=None):
    """Certify that a moment vector lies in the matroid polytope of x.

    By default certifies moment_map(x) itself; pass ``z`` to test any
    other point against the same vertex set.
    """
    vertices = matroid_polytope_vertices(x)
    if z is None:
        z = moment_map(x).z
    elif isinstance(z, MomentVector):
        z = z.z
    return in_convex_hull(list(z), vertices)


def fiber_residual(p, z):
    """How far a matrix P sits from the moment-map fiber over z.

    Returns (max |diag(P) - z|, idempotency residual) -- the residuals of
    the defining system {P symmetric idempotent, diag(P) = z}.  No fiber
    geometry is computed.
    """
    from .projector import idempotency_residual
    arr = p.matrix if isinstance(p, ProjectionMatrix) else np.asarray(p)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError("fiber_residual needs a square matrix")
    z = list(z.z if isinstance(z, MomentVector) else z)
    if len(z) != arr.shape[0]:
        raise DimensionError("z length does not match the matrix size")
    diag_gap = max(abs(arr[i, i] - z[i]) for i in range(len(z)))
    return diag_gap, idempotency_residual(arr)
