"""Weighted Hermitian projections with a prescribed range.

For a PSD weight ``a`` and a subspace ``s``, the projections onto ``s``
that are self-adjoint for the semi-inner product ``<x, y>_a = <a x, y>``
form an affine family: one canonical member plus a free linear parameter
mapping the orthogonal complement of ``s`` into ``N(a) ∩ s``. In finite
dimension the family is always nonempty in exact arithmetic, so the
compatibility test is a numerical diagnostic for ill-conditioned data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IncompatibleError, NoSolutionError
from .linalg import (
    DEFAULT_TOL,
    ObliqueProjection,
    Subspace,
    Tolerances,
    as_matrix,
    check_psd,
    fro,
    null_basis,
    rel_residual,
    subspace_complement,
    subspace_intersect,
)
from .douglas import range_included, reduced_solution

__all__ = [
    "ProjectionFamily",
    "is_compatible",
    "canonical_projection",
    "family",
    "member",
    "is_A_hermitian",
]


@dataclass(frozen=True, eq=False)
class ProjectionFamily:
    """The affine family of weight-Hermitian projections onto a subspace.

    Every member is ``canonical.matrix + free_target.basis @ z @
    free_source.basis^H`` for a coordinate parameter ``z`` of shape
    ``(free_target.dim, free_source.dim)``. The family is a singleton iff
    that parameter space is trivial.
    """

    canonical: ObliqueProjection
    range: Subspace
    free_target: Subspace
    free_source: Subspace
    weight: np.ndarray

    @property
    def param_shape(self) -> tuple[int, int]:
        return (self.free_target.dim, self.free_source.dim)

    @property
    def dimension(self) -> int:
        rows, cols = self.param_shape
        return rows * cols

    def member(self, z=None, tol: Tolerances = DEFAULT_TOL) -> ObliqueProjection:
        """Family member at parameter ``z`` (ignored when the family is a singleton)."""
        if self.dimension == 0:
            return self.canonical
        if z is None:
            return self.canonical
        z = np.asarray(z)
        if z.shape != self.param_shape:
            raise ValueError(f"parameter shape {z.shape} does not match {self.param_shape}")
        matrix = self.canonical.matrix + self.free_target.basis @ z @ self.free_source.basis.conj().T
        return ObliqueProjection(matrix=matrix, range=self.range, nullspace=null_basis(matrix, tol))


def _reduced_projection_data(a: np.ndarray, s: Subspace, tol: Tolerances):
    """Gram-side data (PAP, PA(I-P)) of the projection equation, noise-floored.

    The off-diagonal block of an exactly reducible weight is pure roundoff;
    entries below ``rank_rel * n * ||a||`` are snapped to zero so that the
    range-inclusion diagnostic does not trip on rounding noise.
    """
    n = s.ambient_dim
    p = s.projector()
    complement = np.eye(n) - p
    gram = p @ a @ p
    gram = 0.5 * (gram + gram.conj().T)
    coupling = p @ a @ complement
    if fro(coupling) <= tol.rank_rel * n * fro(a):
        coupling = np.zeros_like(coupling)
    return gram, coupling


def is_compatible(a, s: Subspace, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Numerical compatibility diagnostic for a PSD weight and a subspace.

    True iff the projection equation ``(PaP) X = Pa(I-P)`` is solvable at
    tolerance, ``P`` being the orthogonal projector onto ``s``. Always true
    in exact arithmetic over finite-dimensional spaces.
    """
    a = check_psd(a, tol)
    if a.shape[0] != s.ambient_dim:
        raise ValueError("weight and subspace ambient dimensions differ")
    gram, coupling = _reduced_projection_data(a, s, tol)
    if fro(coupling) == 0.0:
        return True
    return range_included(coupling, gram, tol)


def canonical_projection(a, s: Subspace, tol: Tolerances = DEFAULT_TOL) -> ObliqueProjection:
    """The canonical weight-Hermitian projection onto ``s``.

    Built as ``P + D`` with ``D`` the reduced solution of
    ``(PaP) X = Pa(I-P)``; its nullspace is the preimage ``a^{-1}(s^perp)``
    minus the part of ``N(a)`` inside ``s``.
    """
    a = check_psd(a, tol)
    if a.shape[0] != s.ambient_dim:
        raise ValueError("weight and subspace ambient dimensions differ")
    n = s.ambient_dim
    p = s.projector()
    gram, coupling = _reduced_projection_data(a, s, tol)
    if fro(coupling) == 0.0:
        correction = np.zeros_like(coupling)
    else:
        try:
            correction = reduced_solution(gram, coupling, tol).solution
        except NoSolutionError as exc:
            raise IncompatibleError(
                "projection equation unsolvable at tolerance; the weight/subspace pair "
                "is numerically incompatible"
            ) from exc
    matrix = p + correction
    hermitian_defect = rel_residual(fro(a @ matrix - matrix.conj().T @ a), fro(a))
    if hermitian_defect > 10 * max(1.0, float(n)) * tol.residual_rel:
        raise IncompatibleError(
            f"canonical projection lost weight-Hermitian symmetry (defect {hermitian_defect:.3e})"
        )
    return ObliqueProjection(matrix=matrix, range=s, nullspace=null_basis(matrix, tol))


def family(a, s: Subspace, tol: Tolerances = DEFAULT_TOL) -> ProjectionFamily:
    """The full affine family of weight-Hermitian projections onto ``s``."""
    a = check_psd(a, tol)
    canonical = canonical_projection(a, s, tol)
    return ProjectionFamily(
        canonical=canonical,
        range=s,
        free_target=subspace_intersect(null_basis(a, tol), s, tol),
        free_source=subspace_complement(s),
        weight=a,
    )


def member(fam: ProjectionFamily, z=None, tol: Tolerances = DEFAULT_TOL) -> ObliqueProjection:
    """Module-level alias of ``ProjectionFamily.member``."""
    return fam.member(z, tol)


def is_A_hermitian(a, q, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff ``a q = q^H a`` at tolerance (``q`` self-adjoint for the weight)."""
    a = as_matrix(a, "a")
    q = as_matrix(q, "q")
    if a.shape != q.shape or a.shape[0] != a.shape[1]:
        raise ValueError("a and q must be square matrices of equal size")
    defect = fro(a @ q - q.conj().T @ a)
    return defect <= tol.residual_rel * fro(a) * max(1.0, fro(q))
