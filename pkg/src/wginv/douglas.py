"""Solvers for operator equations ``A X = B`` with range constraints.

The reduced solution is the unique solution whose rows live in the row
space of ``A``; prescribing instead an arbitrary complement of the
nullspace of ``A`` as the range yields the constrained solution, and the
oblique pseudoinverse drops out as the special case where the data are a
pair of projections.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NoSolutionError, PreconditionError
from .linalg import (
    DEFAULT_TOL,
    ObliqueProjection,
    Subspace,
    Tolerances,
    as_matrix,
    fro,
    null_basis,
    oblique_projector,
    pinv,
    range_basis,
    rel_residual,
    subspaces_equal,
)

__all__ = [
    "DouglasSolution",
    "range_included",
    "reduced_solution",
    "douglas_norm_certificate",
    "constrained_solution",
    "oblique_pinv",
]


@dataclass(frozen=True, eq=False)
class DouglasSolution:
    """Solution of ``A X = B`` together with its acceptance diagnostics.

    ``residual`` is ``||A X - B|| / ||B||``; ``range_constraint_violation``
    measures how far the columns of the solution stray from the prescribed
    range, relative to ``||X||``.
    """

    solution: np.ndarray
    residual: float
    range_constraint_violation: float


def range_included(b, a, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff the column space of ``b`` lies inside that of ``a`` at tolerance.

    Tests ``||(I - P_{R(a)}) b|| <= residual_rel * ||b||``, with the
    convention that the zero matrix is included in every range.
    """
    b = as_matrix(b, "b")
    a = as_matrix(a, "a")
    if b.shape[0] != a.shape[0]:
        raise ValueError("b and a must have the same number of rows")
    norm_b = fro(b)
    if norm_b == 0.0:
        return True
    proj = range_basis(a, tol).projector()
    return fro(b - proj @ b) <= tol.residual_rel * norm_b


def reduced_solution(a, b, tol: Tolerances = DEFAULT_TOL) -> DouglasSolution:
    """The solution of ``a X = b`` whose rows lie in the row space of ``a``.

    Computed as ``pinv(a) @ b``. Raises ``NoSolutionError`` when the range
    inclusion test fails.
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if not range_included(b, a, tol):
        raise NoSolutionError("range of b is not contained in range of a at tolerance")
    d = pinv(a, tol) @ b
    residual = rel_residual(fro(a @ d - b), fro(b))
    row_space = range_basis(a.conj().T, tol).projector()
    violation = rel_residual(fro(d - row_space @ d), fro(d))
    return DouglasSolution(solution=d, residual=residual, range_constraint_violation=violation)


def douglas_norm_certificate(a, b, d, tol: Tolerances = DEFAULT_TOL) -> float:
    """Smallest ``lam`` with ``lam * a a^H - b b^H`` positive semidefinite.

    For a reduced solution ``d`` of ``a X = b`` this equals ``||d||_2^2``.
    The pencil is compressed onto the range of ``a`` first: when the range
    inclusion holds, both quadratic forms vanish on its orthogonal
    complement, and the compression avoids a singular pencil.
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    as_matrix(d, "d")
    u = range_basis(a, tol).basis
    if u.shape[1] == 0:
        return 0.0
    gram_a = u.conj().T @ (a @ a.conj().T) @ u
    gram_b = u.conj().T @ (b @ b.conj().T) @ u
    gram_a = 0.5 * (gram_a + gram_a.conj().T)
    gram_b = 0.5 * (gram_b + gram_b.conj().T)
    eigs = scipy.linalg.eigh(gram_b, gram_a, eigvals_only=True)
    return max(float(eigs[-1]), 0.0)


def constrained_solution(a, b, m: Subspace, tol: Tolerances = DEFAULT_TOL) -> DouglasSolution:
    """The unique solution of ``a X = b`` with range inside ``m``.

    Requires the whole space to split as ``N(a) + m`` (direct sum); the
    solution is the reduced solution pushed onto ``m`` along ``N(a)``. Its
    nullspace coincides with the nullspace of ``b``.
    """
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if m.ambient_dim != a.shape[1]:
        raise ValueError("constraint subspace must live in the domain of a")
    reduced = reduced_solution(a, b, tol)
    onto_m = oblique_projector(m, null_basis(a, tol), tol)
    c = onto_m.matrix @ reduced.solution
    residual = rel_residual(fro(a @ c - b), fro(b))
    violation = rel_residual(fro(c - m.projector() @ c), fro(c))
    return DouglasSolution(solution=c, residual=residual, range_constraint_violation=violation)


def oblique_pinv(b, p: ObliqueProjection, q: ObliqueProjection, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Generalized inverse of ``b`` with prescribed projections.

    For projections ``p`` (range equal to the column space of ``b``) and
    ``q`` (nullspace equal to the nullspace of ``b``), returns the unique
    ``c`` with ``b c = p.matrix`` and ``c b = q.matrix``, computed as
    ``q @ pinv(b) @ p``. Any {1}-inverse of ``b`` in place of ``pinv(b)``
    yields the same product. The result is a {1,2}-inverse of ``b`` whose
    range is the range of ``q`` and whose nullspace is that of ``p``.

    Raises
    ------
    PreconditionError
        Naming the subspace identity that failed.
    """
    b = as_matrix(b, "b")
    if p.ambient_dim != b.shape[0]:
        raise ValueError("p must act on the codomain of b")
    if q.ambient_dim != b.shape[1]:
        raise ValueError("q must act on the domain of b")
    if not subspaces_equal(q.nullspace, null_basis(b, tol), tol):
        raise PreconditionError("nullspace of q does not equal the nullspace of b")
    if not subspaces_equal(p.range, range_basis(b, tol), tol):
        raise PreconditionError("range of p does not equal the range of b")
    return q.matrix @ pinv(b, tol) @ p.matrix
