"""Dense matrix primitives and subspace algebra.

Matrices are 2d numpy arrays (real or complex); vectors are 1d arrays.
Subspaces are carried by orthonormal basis matrices, so the trivial
subspace is a matrix with zero columns, never a sentinel. All rank
decisions go through a single relative singular-value cutoff
(``Tolerances.rank_rel``) and all residual accept/reject decisions
through ``Tolerances.residual_rel``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DirectSumError, NotPsdError, NumericalFailureError, PreconditionError

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "Subspace",
    "ObliqueProjection",
    "as_matrix",
    "as_vector",
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
    "check_psd",
    "seminorm",
    "seminorm_sq",
]


@dataclass(frozen=True)
class Tolerances:
    """Numerical decision thresholds.

    Parameters
    ----------
    rank_rel : float
        Relative singular-value cutoff. A singular value counts toward the
        rank when it exceeds ``rank_rel * max(m, n) * sigma_max``.
    residual_rel : float
        Relative residual below which an equation or subspace identity is
        accepted as satisfied.
    """

    rank_rel: float = 1e-12
    residual_rel: float = 1e-8

    def __post_init__(self) -> None:
        for name in ("rank_rel", "residual_rel"):
            value = getattr(self, name)
            if not (0.0 < value < 1.0):
                raise ValueError(f"{name} must lie strictly between 0 and 1, got {value}")


DEFAULT_TOL = Tolerances()


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and coerce ``a`` to a 2d float64/complex128 array with finite entries."""
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must have positive dimensions, got shape {arr.shape}")
    arr = _inexact(arr)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def as_vector(a, name: str = "vector") -> np.ndarray:
    """Validate and coerce ``a`` to a 1d float64/complex128 array with finite entries."""
    arr = np.asarray(a)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.reshape(-1)
    if arr.ndim != 1 or arr.shape[0] == 0:
        raise ValueError(f"{name} must be a nonempty vector, got shape {np.asarray(a).shape}")
    arr = _inexact(arr)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def _inexact(arr: np.ndarray) -> np.ndarray:
    if np.iscomplexobj(arr):
        return arr.astype(np.complex128, copy=False)
    return arr.astype(np.float64, copy=False)


def fro(a: np.ndarray) -> float:
    """Frobenius norm, 0.0 for empty arrays."""
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a))


def spec_norm(a: np.ndarray) -> float:
    """Spectral norm, 0.0 for empty arrays."""
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def rel_residual(num: float, scale: float) -> float:
    """num / scale with the conventions 0/0 = 0 and x/0 = inf for x > 0."""
    if num == 0.0:
        return 0.0
    if scale == 0.0:
        return float("inf")
    return num / scale


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of C^n (or R^n) carried by an orthonormal basis matrix.

    ``basis`` has shape ``(ambient_dim, dim)``; zero columns encode the
    trivial subspace.
    """

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self) -> None:
        if self.ambient_dim <= 0:
            raise ValueError("ambient_dim must be positive")
        if self.basis.ndim != 2 or self.basis.shape[0] != self.ambient_dim:
            raise ValueError(
                f"basis shape {self.basis.shape} does not match ambient dimension {self.ambient_dim}"
            )
        k = self.basis.shape[1]
        if k > self.ambient_dim:
            raise ValueError("subspace dimension exceeds ambient dimension")
        if k:
            gram = self.basis.conj().T @ self.basis
            if fro(gram - np.eye(k)) > 1e-8 * max(1.0, float(np.sqrt(k))):
                raise ValueError("basis columns are not orthonormal")

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        """Orthogonal projector matrix ``basis @ basis^H``."""
        if self.dim == 0:
            return np.zeros((self.ambient_dim, self.ambient_dim))
        return self.basis @ self.basis.conj().T


@dataclass(frozen=True, eq=False)
class ObliqueProjection:
    """An idempotent matrix together with its range and nullspace.

    ``matrix`` fixes every vector of ``range`` and annihilates every vector
    of ``nullspace``; the two subspaces are complementary.
    """

    matrix: np.ndarray
    range: Subspace
    nullspace: Subspace

    def __post_init__(self) -> None:
        n = self.matrix.shape[0]
        if self.matrix.ndim != 2 or self.matrix.shape[1] != n:
            raise ValueError("projection matrix must be square")
        if self.range.ambient_dim != n or self.nullspace.ambient_dim != n:
            raise ValueError("range/nullspace ambient dimension mismatch")
        if self.range.dim + self.nullspace.dim != n:
            raise ValueError(
                f"range dim {self.range.dim} + nullspace dim {self.nullspace.dim} != ambient {n}"
            )

    @property
    def ambient_dim(self) -> int:
        return self.matrix.shape[0]


def _svd_full(m: np.ndarray):
    try:
        return np.linalg.svd(m, full_matrices=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - BLAS dependent
        raise NumericalFailureError(f"SVD failed to converge: {exc}") from exc


def svd(m) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin singular value decomposition ``m = u @ diag(s) @ vh``.

    Returns
    -------
    u, s, vh
        ``u`` and ``vh.conj().T`` have orthonormal columns, ``s`` is
        descending and nonnegative.
    """
    m = as_matrix(m)
    try:
        return np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - BLAS dependent
        raise NumericalFailureError(f"SVD failed to converge: {exc}") from exc


def _rank_from_sigma(s: np.ndarray, shape: tuple[int, int], tol: Tolerances) -> int:
    if s.size == 0 or s[0] == 0.0:
        return 0
    cutoff = tol.rank_rel * max(shape) * s[0]
    return int(np.sum(s > cutoff))


def numeric_rank(m, tol: Tolerances = DEFAULT_TOL) -> int:
    """Number of singular values above ``rank_rel * max(m, n) * sigma_max``."""
    m = as_matrix(m)
    s = np.linalg.svd(m, compute_uv=False)
    return _rank_from_sigma(s, m.shape, tol)


def pinv(m, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse by SVD truncation at the numeric rank."""
    m = as_matrix(m)
    u, s, vh = _svd_full(m)
    r = _rank_from_sigma(s, m.shape, tol)
    if r == 0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=m.dtype)
    return vh[:r].conj().T @ np.diag(1.0 / s[:r]) @ u[:, :r].conj().T


def range_basis(m, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Orthonormal basis of the column space, as a ``Subspace`` of C^rows."""
    m = as_matrix(m)
    u, s, _ = _svd_full(m)
    r = _rank_from_sigma(s, m.shape, tol)
    return Subspace(m.shape[0], u[:, :r])


def null_basis(m, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Orthonormal basis of the nullspace, as a ``Subspace`` of C^cols."""
    m = as_matrix(m)
    _, s, vh = _svd_full(m)
    r = _rank_from_sigma(s, m.shape, tol)
    return Subspace(m.shape[1], vh[r:].conj().T)


def _null_basis_floored(m: np.ndarray, tol: Tolerances, scale_floor: float) -> Subspace:
    """Nullspace with the rank cutoff floored at an external scale.

    For matrices assembled from quantities of known magnitude (projector
    products), sigma_max can be pure roundoff; flooring the cutoff at the
    assembly scale keeps rounding noise from being counted as rank.
    """
    _, s, vh = _svd_full(m)
    if s.size == 0:
        return Subspace(m.shape[1], vh.conj().T)
    cutoff = tol.rank_rel * max(m.shape) * max(float(s[0]), scale_floor)
    r = int(np.sum(s > cutoff))
    return Subspace(m.shape[1], vh[r:].conj().T)


def subspace_complement(s: Subspace) -> Subspace:
    """Orthogonal complement within the same ambient space."""
    if s.dim == 0:
        return Subspace(s.ambient_dim, np.eye(s.ambient_dim))
    if s.dim == s.ambient_dim:
        return Subspace(s.ambient_dim, np.zeros((s.ambient_dim, 0)))
    # x is orthogonal to S iff basis^H x = 0
    _, sv, vh = _svd_full(s.basis.conj().T)
    r = _rank_from_sigma(sv, s.basis.conj().T.shape, DEFAULT_TOL)
    return Subspace(s.ambient_dim, vh[r:].conj().T)


def subspace_from_span(columns, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Subspace spanned by the columns of an arbitrary matrix."""
    return range_basis(columns, tol)


def orth_projector(s: Subspace) -> ObliqueProjection:
    """Orthogonal projection onto ``s``."""
    return ObliqueProjection(matrix=s.projector(), range=s, nullspace=subspace_complement(s))


def oblique_projector(m: Subspace, n: Subspace, tol: Tolerances = DEFAULT_TOL) -> ObliqueProjection:
    """Projection onto ``m`` along ``n`` for complementary subspaces.

    Solves ``[m.basis | n.basis] c = x`` blockwise: the projection keeps the
    ``m`` coordinates and drops the ``n`` coordinates.

    Raises
    ------
    DirectSumError
        If ``dim m + dim n`` is not the ambient dimension or the stacked
        basis is rank deficient at tolerance.
    """
    if m.ambient_dim != n.ambient_dim:
        raise DirectSumError("subspaces live in different ambient spaces")
    dim = m.ambient_dim
    if m.dim + n.dim != dim:
        raise DirectSumError(
            f"dim(range) {m.dim} + dim(nullspace) {n.dim} != ambient dimension {dim}"
        )
    if m.dim == 0:
        return ObliqueProjection(np.zeros((dim, dim)), m, n)
    if n.dim == 0:
        return ObliqueProjection(np.eye(dim), m, n)
    stacked = np.hstack([m.basis, n.basis])
    if numeric_rank(stacked, tol) < dim:
        raise DirectSumError("subspaces are not complementary: stacked basis is rank deficient")
    coeffs = np.linalg.solve(stacked, np.eye(dim, dtype=stacked.dtype))
    return ObliqueProjection(m.basis @ coeffs[: m.dim], m, n)


def projection_from_matrix(q, tol: Tolerances = DEFAULT_TOL) -> ObliqueProjection:
    """Wrap an idempotent matrix as an ``ObliqueProjection``.

    Raises
    ------
    PreconditionError
        If ``q`` is not square, not idempotent at tolerance, or its range
        and nullspace fail to be complementary.
    """
    q = as_matrix(q, "projection")
    if q.shape[0] != q.shape[1]:
        raise PreconditionError(f"projection matrix must be square, got shape {q.shape}")
    scale = max(1.0, fro(q)) ** 2
    if fro(q @ q - q) > tol.residual_rel * scale:
        raise PreconditionError("matrix is not idempotent at tolerance")
    rng = range_basis(q, tol)
    nul = null_basis(q, tol)
    if rng.dim + nul.dim != q.shape[0]:
        raise PreconditionError("range and nullspace of the projection are not complementary")
    return ObliqueProjection(q, rng, nul)


def subspace_intersect(s1: Subspace, s2: Subspace, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Intersection of two subspaces of the same ambient space.

    A vector lies in both subspaces iff both complementary projectors
    annihilate it, so the intersection is the nullspace of the stacked
    complementary projectors. The complements are materialized from their
    bases (exactly zero for full subspaces) and the rank cutoff is floored
    at the unit projector scale.
    """
    if s1.ambient_dim != s2.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    stacked = np.vstack(
        [subspace_complement(s1).projector(), subspace_complement(s2).projector()]
    )
    return _null_basis_floored(stacked, tol, 1.0)


def subspace_contains(outer: Subspace, inner: Subspace, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff every vector of ``inner`` lies in ``outer`` at tolerance."""
    if outer.ambient_dim != inner.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if inner.dim == 0:
        return True
    if inner.dim > outer.dim:
        return False
    residual = inner.basis - outer.projector() @ inner.basis
    return spec_norm(residual) <= tol.residual_rel


def subspaces_equal(s1: Subspace, s2: Subspace, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Equality by symmetric principal-angle residual."""
    return (
        s1.dim == s2.dim
        and subspace_contains(s2, s1, tol)
        and subspace_contains(s1, s2, tol)
    )


def subspace_ominus(s1: Subspace, s2: Subspace, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Orthogonal complement of ``s2`` within ``s1`` (requires ``s2`` inside ``s1``)."""
    if not subspace_contains(s1, s2, tol):
        raise PreconditionError("ominus requires the second subspace to be contained in the first")
    return subspace_intersect(s1, subspace_complement(s2), tol)


def preimage(a, s: Subspace, tol: Tolerances = DEFAULT_TOL) -> Subspace:
    """Preimage ``a^{-1}(s)``: the nullspace of ``(I - P_s) a``.

    The rank cutoff is floored at ``||a||`` so that a residual map that is
    pure roundoff (every column of ``a`` already lands in ``s``) is treated
    as zero.
    """
    a = as_matrix(a, "a")
    if a.shape[0] != s.ambient_dim:
        raise ValueError("row count of the matrix must match the subspace ambient dimension")
    residual_map = subspace_complement(s).projector() @ a
    return _null_basis_floored(residual_map, tol, fro(a))


def check_psd(a, tol: Tolerances = DEFAULT_TOL, name: str = "weight") -> np.ndarray:
    """Validate Hermitian positive semidefiniteness, tolerating roundoff.

    Returns the Hermitian symmetrization of ``a``; raises ``NotPsdError``
    when the skew part or the most negative eigenvalue exceeds
    ``residual_rel * ||a||``.
    """
    a = as_matrix(a, name)
    if a.shape[0] != a.shape[1]:
        raise NotPsdError(f"{name} must be square, got shape {a.shape}")
    scale = fro(a)
    if scale == 0.0:
        return a
    if fro(a - a.conj().T) > tol.residual_rel * scale:
        raise NotPsdError(f"{name} is not Hermitian at tolerance")
    sym = 0.5 * (a + a.conj().T)
    min_eig = float(np.linalg.eigvalsh(sym)[0])
    if min_eig < -tol.residual_rel * scale:
        raise NotPsdError(f"{name} has negative eigenvalue {min_eig:.3e}")
    return sym


def seminorm_sq(a, x, tol: Tolerances = DEFAULT_TOL) -> float:
    """Squared seminorm ``Re <a x, x>`` clamped at zero (``a`` PSD)."""
    a = check_psd(a, tol)
    x = as_vector(x, "x")
    value = float(np.real(np.vdot(x, a @ x)))
    return max(value, 0.0)


def seminorm(a, x, tol: Tolerances = DEFAULT_TOL) -> float:
    """Seminorm ``sqrt(<a x, x>)`` induced by a PSD weight ``a``."""
    return float(np.sqrt(seminorm_sq(a, x, tol)))
