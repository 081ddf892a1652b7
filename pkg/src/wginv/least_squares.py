"""Seminorm least-squares solvers built on weighted projection families.

Covers minimizers of ``||b x - y||`` in a PSD output seminorm, the
two-stage problem that additionally minimizes an input seminorm over the
argmin set, abstract smoothing over an affine set (``min ||T x||`` on
``y + S``), equality-constrained least squares, and minimum-variance
estimation under a possibly singular quadratic form.

Degenerate inputs (right-hand side already in range, zero base point) are
handled by explicit branches and the fired branch is recorded on the
result object.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compatibility import ProjectionFamily, family
from .errors import InfeasibleError, PreconditionError
from .linalg import (
    DEFAULT_TOL,
    Subspace,
    Tolerances,
    as_matrix,
    as_vector,
    check_psd,
    fro,
    null_basis,
    pinv,
    range_basis,
    rel_residual,
    seminorm,
    subspace_intersect,
)
from .weighted_inverse import wgi_family

__all__ = [
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
]


@dataclass(frozen=True, eq=False)
class SplineSet:
    """Minimizers of ``||T x||`` over the affine set ``anchor + subspace``.

    The minimizers are ``(I - Q) anchor`` over the projection family of the
    Gram weight ``T^H T``; ``min_norm_element`` is the unique one of
    minimal Euclidean norm. When the anchor already lies in the subspace
    the minimum value is zero and the minimizer set degenerates
    (``anchor_in_subspace`` is set; the family description then only
    produces the zero vector).
    """

    anchor: np.ndarray
    subspace: Subspace
    family: ProjectionFamily
    min_norm_element: np.ndarray
    anchor_in_subspace: bool

    def member(self, z=None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        proj = self.family.member(z, tol).matrix
        return self.anchor - proj @ self.anchor


@dataclass(frozen=True, eq=False)
class LssSolutionSet:
    """All minimizers of ``||b x - rhs||`` in the output seminorm.

    For the canonical projection the minimizers form ``particular +
    translate``; other family members ``P`` describe the remaining
    solutions through ``b x = P rhs``. ``exact`` flags the branch where the
    right-hand side is in the range of ``b`` and the set is the plain
    solution set of ``b x = rhs``.
    """

    particular: np.ndarray
    translate: Subspace
    range_family: ProjectionFamily
    rhs: np.ndarray
    residual_seminorm: float
    exact: bool


@dataclass(frozen=True, eq=False)
class AffineSeminormMin:
    """Minimizers of a PSD seminorm over ``base + subspace`` with ``base ⟂ subspace``.

    ``minimizer`` is the canonical one; the full set is ``(I - Q) base``
    over the family. For ``base = 0`` the minimizers are exactly the
    subspace vectors annihilated by the weight (``degenerate`` branch,
    described by ``minimizers_subspace``).
    """

    minimizer: np.ndarray
    family: ProjectionFamily
    base: np.ndarray
    degenerate: bool
    minimizers_subspace: Subspace | None

    def member(self, z=None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        proj = self.family.member(z, tol).matrix
        return self.base - proj @ self.base


@dataclass(frozen=True, eq=False)
class A1A2LssFamily:
    """Two-stage least-squares solutions ``(I - Q(z1)) pinv(b) P(z2) rhs``.

    Stage one minimizes the output seminorm of ``b x - rhs``; stage two
    minimizes the input seminorm over each stage-one solution set.
    ``canonical`` is the member at zero parameters. Branch flags:
    ``rhs_in_range`` (stage one reduces to exact solutions) and
    ``zero_particular`` (the projected right-hand side vanishes, in which
    case the input-seminorm minimizers form ``degenerate_minimizers``).
    """

    b: np.ndarray
    weight_in: np.ndarray
    weight_out: np.ndarray
    rhs: np.ndarray
    fam_null: ProjectionFamily
    fam_range: ProjectionFamily
    b_pinv: np.ndarray
    canonical: np.ndarray
    rhs_in_range: bool
    zero_particular: bool
    degenerate_minimizers: Subspace | None

    def member(self, z1=None, z2=None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        q = self.fam_null.member(z1, tol).matrix
        p = self.fam_range.member(z2, tol).matrix
        x0 = self.b_pinv @ (p @ self.rhs)
        return x0 - q @ x0


@dataclass(frozen=True, eq=False)
class ConstrainedMinResult:
    """Least-squares minimizer of ``||c x - y||`` over the affine set ``x0 + s``.

    ``minimizer`` is the canonical constrained solution; the full set is
    recovered by ``member``. ``reduced_minimizer`` is the shifted vector
    the seminorm problem actually minimizes (``minimizer - pinv(c) y``).
    """

    minimizer: np.ndarray
    reduced_minimizer: np.ndarray
    family: ProjectionFamily
    residual: float
    shift: np.ndarray
    seed: np.ndarray

    def member(self, z=None, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        proj = self.family.member(z, tol).matrix
        return self.seed - proj @ self.seed + self.shift


@dataclass(frozen=True, eq=False)
class BlueResult:
    """Minimizer of a PSD quadratic form over the solutions of ``b^H g = c``."""

    estimator: np.ndarray
    objective: float
    feasibility_residual: float
    family: ProjectionFamily


def splines(t, s: Subspace, y, tol: Tolerances = DEFAULT_TOL) -> SplineSet:
    """Minimize ``||t x||`` over ``y + s``."""
    t = as_matrix(t, "t")
    y = as_vector(y, "y")
    if t.shape[1] != s.ambient_dim or y.shape[0] != s.ambient_dim:
        raise ValueError("operator domain, subspace and anchor dimensions must agree")
    gram = t.conj().T @ t
    gram = 0.5 * (gram + gram.conj().T)
    fam = family(gram, s, tol)
    residual = fro(y - s.projector() @ y)
    in_s = residual <= tol.residual_rel * max(fro(y), 1.0) or fro(y) == 0.0
    min_norm = y - fam.canonical.matrix @ y
    return SplineSet(
        anchor=y,
        subspace=s,
        family=fam,
        min_norm_element=min_norm,
        anchor_in_subspace=bool(in_s),
    )


def a_lss(b, a2, y, tol: Tolerances = DEFAULT_TOL) -> LssSolutionSet:
    """All minimizers of ``||b x - y||`` in the seminorm of the PSD weight ``a2``."""
    b = as_matrix(b, "b")
    a2 = check_psd(a2, tol, "a2")
    y = as_vector(y, "y")
    if b.shape[0] != a2.shape[0] or y.shape[0] != b.shape[0]:
        raise ValueError("weight and right-hand side must live in the codomain of b")
    rng = range_basis(b, tol)
    fam = family(a2, rng, tol)
    particular = pinv(b, tol) @ (fam.canonical.matrix @ y)
    exact = fro(y - rng.projector() @ y) <= tol.residual_rel * max(fro(y), 1.0)
    residual = seminorm(a2, b @ particular - y, tol)
    return LssSolutionSet(
        particular=particular,
        translate=null_basis(b, tol),
        range_family=fam,
        rhs=y,
        residual_seminorm=residual,
        exact=bool(exact),
    )


def normal_equation_check(b, a, u, y, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Weighted normal-equation test ``b^H a (b u - y) = 0``.

    Only valid when the weight's nullspace meets the range of ``b``
    trivially; otherwise the normal equations do not characterize the
    minimizers and a ``PreconditionError`` is raised.
    """
    b = as_matrix(b, "b")
    a = check_psd(a, tol, "a")
    u = as_vector(u, "u")
    y = as_vector(y, "y")
    meet = subspace_intersect(null_basis(a, tol), range_basis(b, tol), tol)
    if meet.dim != 0:
        raise PreconditionError(
            "nullspace of the weight meets the range of b nontrivially; "
            "the normal equations do not characterize the minimizers"
        )
    defect = fro(b.conj().T @ (a @ (b @ u - y)))
    scale = fro(b) * fro(a) * (fro(b) * fro(u) + fro(y))
    return defect <= tol.residual_rel * max(scale, 1.0)


def affine_seminorm_min(a, s: Subspace, x0, tol: Tolerances = DEFAULT_TOL) -> AffineSeminormMin:
    """Minimize the seminorm of the PSD weight ``a`` over ``x0 + s`` (``x0 ⟂ s``)."""
    a = check_psd(a, tol, "a")
    x0 = as_vector(x0, "x0")
    if a.shape[0] != s.ambient_dim or x0.shape[0] != s.ambient_dim:
        raise ValueError("weight, subspace and base point dimensions must agree")
    norm_x0 = fro(x0)
    if norm_x0 > 0.0 and fro(s.projector() @ x0) > tol.residual_rel * norm_x0:
        raise PreconditionError("base point must be orthogonal to the subspace")
    fam = family(a, s, tol)
    if norm_x0 == 0.0:
        return AffineSeminormMin(
            minimizer=np.zeros_like(x0),
            family=fam,
            base=x0,
            degenerate=True,
            minimizers_subspace=subspace_intersect(null_basis(a, tol), s, tol),
        )
    minimizer = x0 - fam.canonical.matrix @ x0
    return AffineSeminormMin(
        minimizer=minimizer, family=fam, base=x0, degenerate=False, minimizers_subspace=None
    )


def a1a2_lss(b, a1, a2, y, tol: Tolerances = DEFAULT_TOL) -> A1A2LssFamily:
    """Two-stage seminorm least squares: output-seminorm argmin, then input-seminorm min."""
    b = as_matrix(b, "b")
    a1 = check_psd(a1, tol, "a1")
    a2 = check_psd(a2, tol, "a2")
    y = as_vector(y, "y")
    if y.shape[0] != b.shape[0]:
        raise ValueError("right-hand side must live in the codomain of b")
    wgi = wgi_family(b, a1, a2, tol)
    rng = range_basis(b, tol)
    x0 = wgi.b_pinv @ (wgi.fam_range.canonical.matrix @ y)
    u0 = wgi.canonical @ y
    rhs_in_range = fro(y - rng.projector() @ y) <= tol.residual_rel * max(fro(y), 1.0)
    zero_particular = fro(x0) <= tol.residual_rel * max(fro(y), 1.0)
    degenerate = None
    if zero_particular:
        degenerate = subspace_intersect(null_basis(a1, tol), null_basis(b, tol), tol)
    return A1A2LssFamily(
        b=b,
        weight_in=a1,
        weight_out=a2,
        rhs=y,
        fam_null=wgi.fam_null,
        fam_range=wgi.fam_range,
        b_pinv=wgi.b_pinv,
        canonical=u0,
        rhs_in_range=bool(rhs_in_range),
        zero_particular=bool(zero_particular),
        degenerate_minimizers=degenerate,
    )


def optimal_lss(b, a1, a2, y, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Optimal two-stage solution of minimal Euclidean norm.

    Equals the canonical weighted generalized inverse applied to ``y``:
    it minimizes the plain residual among output-seminorm minimizers, is a
    two-stage solution, and has minimal Euclidean norm among those.
    """
    y = as_vector(y, "y")
    return wgi_family(b, a1, a2, tol).canonical @ y


def constrained_min(c, s: Subspace, x0, y, tol: Tolerances = DEFAULT_TOL) -> ConstrainedMinResult:
    """Minimize ``||c x - y||`` over the affine set ``x0 + s``.

    Substituting ``x = u + pinv(c) y`` turns the problem into seminorm
    minimization of the Gram weight ``c^H c`` over a shifted affine set;
    the constrained minimizer is recovered by shifting back.
    """
    c = as_matrix(c, "c")
    x0 = as_vector(x0, "x0")
    y = as_vector(y, "y")
    if c.shape[1] != s.ambient_dim or x0.shape[0] != s.ambient_dim or y.shape[0] != c.shape[0]:
        raise ValueError("operator, subspace and vector dimensions must agree")
    gram = c.conj().T @ c
    gram = 0.5 * (gram + gram.conj().T)
    fam = family(gram, s, tol)
    shift = pinv(c, tol) @ y
    seed = x0 - shift
    u = seed - fam.canonical.matrix @ seed
    x = u + shift
    return ConstrainedMinResult(
        minimizer=x,
        reduced_minimizer=u,
        family=fam,
        residual=fro(c @ x - y),
        shift=shift,
        seed=seed,
    )


def blue(b, v2, c, tol: Tolerances = DEFAULT_TOL) -> BlueResult:
    """Minimize ``<v2 g, g>`` over the solutions of ``b^H g = c``.

    Feasibility requires ``c`` in the range of ``b^H``; the feasible set is
    ``pinv(b^H) c + N(b^H)`` and the minimum of the (possibly singular)
    quadratic form over it is found by seminorm minimization.
    """
    b = as_matrix(b, "b")
    v2 = check_psd(v2, tol, "v2")
    c = as_vector(c, "c")
    bh = b.conj().T
    if c.shape[0] != bh.shape[0]:
        raise ValueError("constraint vector must live in the domain of b")
    if v2.shape[0] != b.shape[0]:
        raise ValueError("quadratic form must act on the codomain of b")
    base = pinv(bh, tol) @ c
    norm_c = fro(c)
    if rel_residual(fro(bh @ base - c), norm_c) > tol.residual_rel:
        raise InfeasibleError("constraint target is not in the range of b^H")
    minimized = affine_seminorm_min(v2, null_basis(bh, tol), base, tol)
    g = minimized.minimizer
    objective = float(np.real(np.vdot(g, v2 @ g)))
    return BlueResult(
        estimator=g,
        objective=max(objective, 0.0),
        feasibility_residual=rel_residual(fro(bh @ g - c), norm_c),
        family=minimized.family,
    )
