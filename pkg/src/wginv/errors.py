"""Exception hierarchy shared by the numerical core, the service and the CLI."""


class WginvError(Exception):
    """Base class for all library errors."""


class NumericalFailureError(WginvError):
    """A dense decomposition failed to converge."""


class DirectSumError(WginvError):
    """Two subspaces that must be complementary fail the direct-sum test."""


class NoSolutionError(WginvError):
    """A matrix equation A X = B has no solution at the working tolerance."""


class PreconditionError(WginvError):
    """An input violates a documented subspace or orthogonality precondition."""


class NotPsdError(WginvError):
    """A weight matrix is not Hermitian positive semidefinite at tolerance."""


class IncompatibleError(WginvError):
    """A weight/subspace pair is numerically incompatible.

    In exact arithmetic every finite-dimensional pair is compatible; this
    error surfaces ill-conditioning of the reduced projection equation
    instead of silently regularizing it.
    """


class InfeasibleError(WginvError):
    """An affine constraint set is empty (e.g. the target is out of range)."""


class ParseError(WginvError):
    """A matrix or vector file could not be parsed."""
