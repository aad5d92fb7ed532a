"""grasskit: subspace coordinates and the statistics living on them.

A d-dimensional subspace of R^n is handled in two coordinate systems --
the projective vector of maximal minors of any spanning basis, and the
orthogonal projection matrix -- with exact rational arithmetic where
identities are exact and float64 where optimization or sampling needs it.
On top of the conversions sit: determinantal point processes with
projection kernels (exact pmf, correlations, sampling), squared-coordinate
membership residuals and degrees, maximum-likelihood fitting of two
subset-frequency models, moment maps with exact polytope certificates, and
graph cut spaces with combinatorial projectors and effective resistances.
"""

from .dpp import CountVector, DppModel, correlation, dpp_pmf, dpp_sample, marginals, moebius_pmf
from .errors import (ConvergenceFailure, DimensionError, DomainError,
                     EmptyBasis, EmptyGraph, GrasskitError, NotAProjection,
                     NotInPositiveChart, NotInvertible, NotOnGrassmannian,
                     OutOfTable, ParseError, RankDeficient, WrongDimension,
                     ZeroEntry, ZeroVector)
from .graphs import (OrientedGraph, cut_space_basis, effective_resistances,
                     kirchhoff_projection, spanning_forest_count)
from .likelihood import (ChartPoint, FitResult, ReparamPoint, chart_minors,
                         loglik, ml_degree, mle_fit, model_pmf,
                         reparam_forward, reparam_invert)
from .moment import (MomentVector, fiber_residual, hypersimplex_contains,
                     in_convex_hull, in_matroid_polytope, matroid_polytope_vertices,
                     moment_from_projection, moment_map)
from .plucker import (PluckerVector, cocircuit_matrix, d_subsets,
                      plucker_from_basis, plucker_residual, sort_signed)
from .projector import (ProjectionMatrix, basis_from_projection, complement,
                        idempotency_residual, pgr_degree,
                        projection_from_basis, projection_from_plucker)
from .squared import (SquaredPlucker, sgr2_residual, sgr4_quartic, sgr_degree,
                      square_plucker)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
