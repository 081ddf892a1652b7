"""Weighted generalized inverses, oblique projections and seminorm least squares.

Dense real/complex matrices only; every range is closed and every
weight/subspace pair is compatible in exact arithmetic, so numerical rank
and residual tolerances replace topological hypotheses throughout.
"""

from .compatibility import (
    ProjectionFamily,
    canonical_projection,
    family,
    is_A_hermitian,
    is_compatible,
    member,
)
from .douglas import (
    DouglasSolution,
    constrained_solution,
    douglas_norm_certificate,
    oblique_pinv,
    range_included,
    reduced_solution,
)
from .errors import (
    DirectSumError,
    IncompatibleError,
    InfeasibleError,
    NoSolutionError,
    NotPsdError,
    NumericalFailureError,
    ParseError,
    PreconditionError,
    WginvError,
)
from .least_squares import (
    A1A2LssFamily,
    AffineSeminormMin,
    BlueResult,
    ConstrainedMinResult,
    LssSolutionSet,
    SplineSet,
    a1a2_lss,
    a_lss,
    affine_seminorm_min,
    blue,
    constrained_min,
    normal_equation_check,
    optimal_lss,
    splines,
)
from .linalg import (
    DEFAULT_TOL,
    ObliqueProjection,
    Subspace,
    Tolerances,
    null_basis,
    numeric_rank,
    oblique_projector,
    orth_projector,
    pinv,
    preimage,
    projection_from_matrix,
    range_basis,
    seminorm,
    seminorm_sq,
    subspace_complement,
    subspace_contains,
    subspace_from_span,
    subspace_intersect,
    subspace_ominus,
    subspaces_equal,
    svd,
)
from .weighted_inverse import GiResiduals, WgiFamily, gi_exists, verify_gi, wgi_family, wgi_member

__version__ = "0.1.0"

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "Subspace",
    "ObliqueProjection",
    "svd",
    "numeric_rank",
    "pinv",
    "range_basis",
    "null_basis",
    "orth_projector",
    "oblique_projector",
    "projection_from_matrix",
    "subspace_from_span",
    "subspace_intersect",
    "subspace_ominus",
    "subspace_complement",
    "subspaces_equal",
    "subspace_contains",
    "preimage",
    "seminorm",
    "seminorm_sq",
    "DouglasSolution",
    "range_included",
    "reduced_solution",
    "douglas_norm_certificate",
    "constrained_solution",
    "oblique_pinv",
    "ProjectionFamily",
    "is_compatible",
    "canonical_projection",
    "family",
    "member",
    "is_A_hermitian",
    "WgiFamily",
    "GiResiduals",
    "gi_exists",
    "wgi_family",
    "wgi_member",
    "verify_gi",
    "SplineSet",
    "LssSolutionSet",
    "AffineSeminormMin",
    "A1A2LssFamily",
    "ConstrainedMinResult",
    "BlueResult",
    "splines",
    "a_lss",
    "normal_equation_check",
    "affine_seminorm_min",
    "a1a2_lss",
    "optimal_lss",
    "constrained_min",
    "blue",
    "WginvError",
    "NumericalFailureError",
    "DirectSumError",
    "NoSolutionError",
    "PreconditionError",
    "NotPsdError",
    "IncompatibleError",
    "InfeasibleError",
    "ParseError",
]
