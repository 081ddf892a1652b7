"""Shared random-instance generators and independent oracles.

The oracles are built from `wginv.linalg` primitives only (pseudoinverse,
bases, eigendecompositions), never from the solver modules they check.
"""

from __future__ import annotations

import numpy as np

from wginv.linalg import (
    ObliqueProjection,
    Subspace,
    null_basis,
    pinv,
    range_basis,
    subspace_from_span,
)


def random_matrix(rng: np.random.Generator, m: int, n: int, rank: int, complex_entries=False):
    """Random m x n matrix of the given rank (well-separated singular values)."""
    rank = min(rank, m, n)
    if rank == 0:
        dtype = complex if complex_entries else float
        return np.zeros((m, n), dtype=dtype)
    left = rng.standard_normal((m, rank))
    right = rng.standard_normal((rank, n))
    if complex_entries:
        left = left + 1j * rng.standard_normal((m, rank))
        right = right + 1j * rng.standard_normal((rank, n))
    return left @ right


def random_psd(rng: np.random.Generator, n: int, rank: int, complex_entries=False):
    """Random PSD matrix of the given rank; rank 0 gives the zero weight."""
    rank = min(rank, n)
    if rank == 0:
        dtype = complex if complex_entries else float
        return np.zeros((n, n), dtype=dtype)
    f = rng.standard_normal((n, rank))
    if complex_entries:
        f = f + 1j * rng.standard_normal((n, rank))
    a = f @ f.conj().T
    return 0.5 * (a + a.conj().T)


def random_spd(rng: np.random.Generator, n: int, complex_entries=False):
    """Random positive definite matrix (eigenvalues bounded away from zero)."""
    f = rng.standard_normal((n, n))
    if complex_entries:
        f = f + 1j * rng.standard_normal((n, n))
    a = f @ f.conj().T + 0.5 * n * np.eye(n)
    return 0.5 * (a + a.conj().T)


def random_subspace(rng: np.random.Generator, n: int, k: int, complex_entries=False) -> Subspace:
    if k == 0:
        return Subspace(n, np.zeros((n, 0), dtype=complex if complex_entries else float))
    g = rng.standard_normal((n, k))
    if complex_entries:
        g = g + 1j * rng.standard_normal((n, k))
    return subspace_from_span(g)


def random_complement(rng: np.random.Generator, sub: Subspace) -> Subspace:
    """A random complement of ``sub``: the graph of a random map from sub^perp to sub."""
    n = sub.ambient_dim
    k = sub.dim
    from wginv.linalg import subspace_complement

    perp = subspace_complement(sub)
    if k == 0 or k == n:
        return perp
    mix = rng.standard_normal((k, n - k))
    if np.iscomplexobj(sub.basis):
        mix = mix + 1j * rng.standard_normal((k, n - k))
    columns = perp.basis + sub.basis @ mix
    return subspace_from_span(columns)


def random_projection_pair(rng: np.random.Generator, b: np.ndarray):
    """Random valid data for the prescribed-projection inverse of ``b``.

    Returns projections ``p`` (range R(b), random complementary nullspace)
    and ``q`` (random complementary range, nullspace N(b)).
    """
    from wginv.linalg import oblique_projector

    rng_b = range_basis(b)
    nul_b = null_basis(b)
    p = oblique_projector(rng_b, random_complement(rng, rng_b))
    q = oblique_projector(random_complement(rng, nul_b), nul_b)
    return p, q


def sqrtm_psd(a: np.ndarray) -> np.ndarray:
    """PSD square root via eigendecomposition, negatives clamped to zero."""
    vals, vecs = np.linalg.eigh(0.5 * (a + a.conj().T))
    vals = np.clip(vals, 0.0, None)
    return vecs @ np.diag(np.sqrt(vals)) @ vecs.conj().T


def quad_form(a: np.ndarray, x: np.ndarray) -> float:
    return max(float(np.real(np.vdot(x, a @ x))), 0.0)


def kkt_equality_qp(v2: np.ndarray, bh: np.ndarray, c: np.ndarray):
    """Nullspace-method oracle for min <v2 g, g> subject to bh g = c.

    Parametrizes the feasible set as ``pinv(bh) c + N t`` and solves the
    (always consistent) reduced normal equations with a pseudoinverse.
    Returns the minimizer and the objective value.
    """
    x0 = pinv(bh) @ c
    nb = null_basis(bh).basis
    if nb.shape[1] == 0:
        return x0, quad_form(v2, x0)
    h = nb.conj().T @ v2 @ nb
    rhs = -(nb.conj().T @ (v2 @ x0))
    t = pinv(0.5 * (h + h.conj().T)) @ rhs
    g = x0 + nb @ t
    return g, quad_form(v2, g)


def min_weighted_residual(b: np.ndarray, a2: np.ndarray, y: np.ndarray) -> float:
    """Oracle for the global minimum of ||b x - y|| in the seminorm of a2.

    Reduces to a plain least-squares problem for ``sqrt(a2) b``.
    """
    w = sqrtm_psd(a2)
    wb = w @ b
    wy = w @ y
    proj = range_basis(wb).projector()
    return float(np.linalg.norm(wy - proj @ wy))


def argmin_affine_set(b: np.ndarray, a2: np.ndarray, y: np.ndarray):
    """Oracle description of the stage-one argmin set as (point, nullspace basis)."""
    w = sqrtm_psd(a2)
    wb = w @ b
    x1 = pinv(wb) @ (w @ y)
    return x1, null_basis(wb).basis


def min_input_seminorm(b: np.ndarray, a1: np.ndarray, a2: np.ndarray, y: np.ndarray) -> float:
    """Oracle for the minimal a1-seminorm over the stage-one argmin set."""
    x1, nb = argmin_affine_set(b, a2, y)
    if nb.shape[1] == 0:
        return float(np.sqrt(quad_form(a1, x1)))
    h = nb.conj().T @ a1 @ nb
    rhs = -(nb.conj().T @ (a1 @ x1))
    t = pinv(0.5 * (h + h.conj().T)) @ rhs
    return float(np.sqrt(quad_form(a1, x1 + nb @ t)))


def projection_members_close(p1: ObliqueProjection, p2: ObliqueProjection, tol=1e-9) -> bool:
    return float(np.linalg.norm(p1.matrix - p2.matrix)) <= tol
