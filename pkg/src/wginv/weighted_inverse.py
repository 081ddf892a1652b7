"""Generalized inverses with positive-semidefinite input/output weights.

For ``b : H -> K`` and PSD weights ``a1`` on H, ``a2`` on K, the solution
set of

    b c b = b,  c b c = c,  a1 c b Hermitian for a1,  a2 b c Hermitian for a2

is parametrized by two independent projection families: weight-Hermitian
projections onto ``N(b)`` for ``a1`` and onto ``R(b)`` for ``a2``. The
member at parameters ``(z1, z2)`` is ``(I - Q(z1)) pinv(b) P(z2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compatibility import ProjectionFamily, family, is_compatible
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    as_matrix,
    fro,
    null_basis,
    pinv,
    range_basis,
    rel_residual,
)

__all__ = [
    "WgiFamily",
    "GiResiduals",
    "gi_exists",
    "wgi_family",
    "wgi_member",
    "verify_gi",
]


@dataclass(frozen=True, eq=False)
class GiResiduals:
    """Relative residuals of the four defining equations of a weighted inverse.

    Each residual is normalized by the natural scale of its left-hand side
    (``||b||``, ``||c||``, ``||a1|| ||c|| ||b||``, ``||a2|| ||b|| ||c||``)
    so verdicts are scale free. ``is_member`` records whether all four fell
    below the acceptance threshold used at construction.
    """

    bcb: float
    cbc: float
    weight_in: float
    weight_out: float
    is_member: bool

    def as_dict(self) -> dict[str, float]:
        return {
            "bcb": self.bcb,
            "cbc": self.cbc,
            "weight_in": self.weight_in,
            "weight_out": self.weight_out,
        }

    @property
    def max_residual(self) -> float:
        return max(self.bcb, self.cbc, self.weight_in, self.weight_out)


@dataclass(frozen=True, eq=False)
class WgiFamily:
    """The full solution set, carried by its two projection-family factors.

    ``fam_null`` parametrizes weight-Hermitian projections onto ``N(b)``
    for the input weight, ``fam_range`` projections onto ``R(b)`` for the
    output weight; ``canonical`` is the member at the zero parameters,
    which maps any right-hand side to the minimal-Euclidean-norm optimal
    solution.
    """

    b: np.ndarray
    weight_in: np.ndarray
    weight_out: np.ndarray
    fam_null: ProjectionFamily
    fam_range: ProjectionFamily
    canonical: np.ndarray
    b_pinv: np.ndarray

    @property
    def param_shapes(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.fam_null.param_shape, self.fam_range.param_shape)

    @property
    def dimension(self) -> int:
        return self.fam_null.dimension + self.fam_range.dimension

    def member(self, z1=None, z2=None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        """Solution at parameters ``(z1, z2)``; ``None`` selects the canonical block."""
        q = self.fam_null.member(z1, tol).matrix
        p = self.fam_range.member(z2, tol).matrix
        eye = np.eye(q.shape[0])
        return (eye - q) @ self.b_pinv @ p


def _check_shapes(b: np.ndarray, a1: np.ndarray, a2: np.ndarray) -> None:
    m, n = b.shape
    if a1.shape != (n, n):
        raise ValueError(f"input weight must be {n}x{n}, got {a1.shape}")
    if a2.shape != (m, m):
        raise ValueError(f"output weight must be {m}x{m}, got {a2.shape}")


def gi_exists(b, a1, a2, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Solvability diagnostic: both weight/subspace pairs must be compatible."""
    b = as_matrix(b, "b")
    a1 = as_matrix(a1, "a1")
    a2 = as_matrix(a2, "a2")
    _check_shapes(b, a1, a2)
    return is_compatible(a1, null_basis(b, tol), tol) and is_compatible(
        a2, range_basis(b, tol), tol
    )


def wgi_family(b, a1, a2, tol: Tolerances = DEFAULT_TOL) -> WgiFamily:
    """Construct the full weighted-inverse family for ``b`` and two PSD weights."""
    b = as_matrix(b, "b")
    a1 = as_matrix(a1, "a1")
    a2 = as_matrix(a2, "a2")
    _check_shapes(b, a1, a2)
    fam_null = family(a1, null_basis(b, tol), tol)
    fam_range = family(a2, range_basis(b, tol), tol)
    b_pinv = pinv(b, tol)
    eye = np.eye(b.shape[1])
    canonical = (eye - fam_null.canonical.matrix) @ b_pinv @ fam_range.canonical.matrix
    return WgiFamily(
        b=b,
        weight_in=a1,
        weight_out=a2,
        fam_null=fam_null,
        fam_range=fam_range,
        canonical=canonical,
        b_pinv=b_pinv,
    )


def wgi_member(fam: WgiFamily, z1=None, z2=None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Module-level alias of ``WgiFamily.member``."""
    return fam.member(z1, z2, tol)


def verify_gi(b, a1, a2, c, tol: Tolerances = DEFAULT_TOL) -> GiResiduals:
    """Residual report for a candidate weighted generalized inverse ``c``."""
    b = as_matrix(b, "b")
    a1 = as_matrix(a1, "a1")
    a2 = as_matrix(a2, "a2")
    c = as_matrix(c, "c")
    _check_shapes(b, a1, a2)
    if c.shape != (b.shape[1], b.shape[0]):
        raise ValueError(f"candidate must be {b.shape[1]}x{b.shape[0]}, got {c.shape}")
    cb = c @ b
    bc = b @ c
    norm_b, norm_c = fro(b), fro(c)
    bcb = rel_residual(fro(b @ cb - b), norm_b)
    cbc = rel_residual(fro(c @ bc - c), norm_c)
    weight_in = rel_residual(fro(a1 @ cb - cb.conj().T @ a1), fro(a1) * norm_c * norm_b)
    weight_out = rel_residual(fro(a2 @ bc - bc.conj().T @ a2), fro(a2) * norm_b * norm_c)
    verdict = max(bcb, cbc, weight_in, weight_out) <= tol.residual_rel
    return GiResiduals(
        bcb=bcb, cbc=cbc, weight_in=weight_in, weight_out=weight_out, is_member=verdict
    )
