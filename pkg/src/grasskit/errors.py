"""Exception types shared across the package."""


class GrasskitError(Exception):
    """Base class for every domain error raised by this package."""


class DimensionError(GrasskitError):
    """Shapes or index sets are incompatible with the requested operation."""


class RankDeficient(GrasskitError):
    """A matrix that must have full row rank does not."""


class ZeroVector(GrasskitError):
    """All coordinates of a vector that must be nonzero are zero."""


class WrongDimension(GrasskitError):
    """The operation is only defined for a specific (d, n)."""


class NotOnGrassmannian(GrasskitError):
    """Coordinates fail the quadratic consistency relations."""


class NotAProjection(GrasskitError):
    """A matrix is not a symmetric idempotent of integral trace."""


class OutOfTable(GrasskitError):
    """A stored lookup table does not cover the requested parameters."""


class EmptyBasis(GrasskitError):
    """No basis exists because the subspace is zero-dimensional."""


class EmptyGraph(GrasskitError):
    """The graph has no edges, so the requested object is undefined."""


class NotInPositiveChart(GrasskitError):
    """A chart point leaves the region where all maximal minors are positive."""


class ZeroEntry(GrasskitError):
    """A chart entry that must be nonzero is zero."""


class DomainError(GrasskitError):
    """A numeric argument lies outside the mathematical domain."""


class NotInvertible(GrasskitError):
    """An exact linear solve hit a singular matrix."""


class ConvergenceFailure(GrasskitError):
    """No optimizer restart reached the stationarity tolerance."""


class ParseError(GrasskitError):
    """Serialized input does not match the expected format."""
