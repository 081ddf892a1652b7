"""Command implementations producing uniform reports.

Each handler converts a validated request model to numpy arrays, calls the
numerical core, and assembles a ``Report``. The FastAPI routes and the CLI
both dispatch through ``run_command`` so a local run and a service call
produce identical reports.
"""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel

from .. import compatibility, douglas, least_squares, linalg, weighted_inverse
from ..io import matrix_digest, matrix_payload
from ..linalg import Tolerances, fro, rel_residual
from .schemas import (
    AlssRequest,
    BlueRequest,
    CompatRequest,
    LssRequest,
    ObliqueRequest,
    PinvRequest,
    Report,
    VerifyRequest,
    WpinvRequest,
)

__all__ = ["run_command"]


def _tol(req) -> Tolerances:
    return Tolerances(rank_rel=req.tol.rank_rel, residual_rel=req.tol.residual_rel)


def _num(x) -> float:
    # +0.0 drops negative zero for byte-stable serialization
    return float(x) + 0.0


def _digests(**arrays) -> dict[str, str]:
    return {name: matrix_digest(arr) for name, arr in arrays.items()}


def _family_dims(fam: compatibility.ProjectionFamily) -> dict[str, int]:
    rows, cols = fam.param_shape
    return {"target_dim": rows, "source_dim": cols, "dimension": fam.dimension}


def _mp_residuals(b: np.ndarray, x: np.ndarray) -> dict[str, float]:
    bx = b @ x
    xb = x @ b
    return {
        "bxb": _num(rel_residual(fro(b @ xb - b), fro(b))),
        "xbx": _num(rel_residual(fro(x @ bx - x), fro(x))),
        "bx_hermitian": _num(rel_residual(fro(bx - bx.conj().T), max(fro(bx), 1.0))),
        "xb_hermitian": _num(rel_residual(fro(xb - xb.conj().T), max(fro(xb), 1.0))),
    }


def _handle_pinv(req: PinvRequest) -> Report:
    tol = _tol(req)
    b = req.b.to_array()
    x = linalg.pinv(b, tol)
    return Report(
        command="pinv",
        inputs=_digests(b=b),
        tolerances=req.tol,
        results={"pinv": matrix_payload(x), "rank": linalg.numeric_rank(b, tol)},
        diagnostics={"mp_residuals": _mp_residuals(b, x)},
        verdict="ok",
    )


def _sample_parameters(rng: np.random.Generator, shape: tuple[int, int]) -> np.ndarray:
    if shape[0] == 0 or shape[1] == 0:
        return np.zeros(shape)
    return rng.standard_normal(shape)


def _handle_wpinv(req: WpinvRequest) -> Report:
    tol = _tol(req)
    b, a1, a2 = req.b.to_array(), req.a1.to_array(), req.a2.to_array()
    fam = weighted_inverse.wgi_family(b, a1, a2, tol)
    res = weighted_inverse.verify_gi(b, a1, a2, fam.canonical, tol)
    samples = []
    rng = np.random.default_rng(req.seed)
    for _ in range(req.samples):
        z1 = _sample_parameters(rng, fam.fam_null.param_shape)
        z2 = _sample_parameters(rng, fam.fam_range.param_shape)
        member = fam.member(z1, z2, tol)
        member_res = weighted_inverse.verify_gi(b, a1, a2, member, tol)
        samples.append(
            {
                "member": matrix_payload(member),
                "residuals": {k: _num(v) for k, v in member_res.as_dict().items()},
                "is_member": member_res.is_member,
            }
        )
    results = {
        "canonical": matrix_payload(fam.canonical),
        "family_null": _family_dims(fam.fam_null),
        "family_range": _family_dims(fam.fam_range),
    }
    if samples:
        results["samples"] = samples
    return Report(
        command="wpinv",
        inputs=_digests(b=b, a1=a1, a2=a2),
        tolerances=req.tol,
        seed=req.seed if req.samples else None,
        results=results,
        diagnostics={"residuals": {k: _num(v) for k, v in res.as_dict().items()}},
        verdict="member" if res.is_member else "not-member",
    )


def _handle_compat(req: CompatRequest) -> Report:
    tol = _tol(req)
    a = req.a.to_array()
    span = req.s.to_array()
    s = linalg.subspace_from_span(span, tol)
    compatible = compatibility.is_compatible(a, s, tol)
    fam = compatibility.family(a, s, tol)
    q = fam.canonical.matrix
    diagnostics = {
        "compatible": compatible,
        "idempotency_residual": _num(rel_residual(fro(q @ q - q), max(fro(q), 1.0) ** 2)),
        "weight_hermitian_residual": _num(
            rel_residual(fro(a @ q - q.conj().T @ a), fro(a) * max(fro(q), 1.0))
        ),
    }
    return Report(
        command="compat",
        inputs=_digests(a=a, s=span),
        tolerances=req.tol,
        results={
            "canonical": matrix_payload(q),
            "subspace_dim": s.dim,
            "nullspace_dim": fam.canonical.nullspace.dim,
            "family": _family_dims(fam),
        },
        diagnostics=diagnostics,
        verdict="ok",
    )


def _handle_oblique(req: ObliqueRequest) -> Report:
    tol = _tol(req)
    b = req.b.to_array()
    p = linalg.projection_from_matrix(req.p.to_array(), tol)
    q = linalg.projection_from_matrix(req.q.to_array(), tol)
    c = douglas.oblique_pinv(b, p, q, tol)
    return Report(
        command="oblique",
        inputs=_digests(b=b, p=p.matrix, q=q.matrix),
        tolerances=req.tol,
        results={"inverse": matrix_payload(c)},
        diagnostics={
            "bc_equals_p": _num(rel_residual(fro(b @ c - p.matrix), max(fro(p.matrix), 1.0))),
            "cb_equals_q": _num(rel_residual(fro(c @ b - q.matrix), max(fro(q.matrix), 1.0))),
            "bcb": _num(rel_residual(fro(b @ c @ b - b), fro(b))),
            "cbc": _num(rel_residual(fro(c @ b @ c - c), fro(c))),
        },
        verdict="ok",
    )


def _handle_lss(req: LssRequest) -> Report:
    tol = _tol(req)
    b, a2, y = req.b.to_array(), req.a2.to_array(), req.y.to_array()
    sol = least_squares.a_lss(b, a2, y, tol)
    return Report(
        command="lss",
        inputs=_digests(b=b, a2=a2, y=y),
        tolerances=req.tol,
        results={
            "particular": matrix_payload(sol.particular),
            "translate_basis": matrix_payload(sol.translate.basis),
            "family": _family_dims(sol.range_family),
        },
        diagnostics={
            "residual_seminorm": _num(sol.residual_seminorm),
            "exact": sol.exact,
        },
        verdict="exact-solution" if sol.exact else "least-squares",
    )


def _handle_alss(req: AlssRequest) -> Report:
    tol = _tol(req)
    b, a1, a2, y = req.b.to_array(), req.a1.to_array(), req.a2.to_array(), req.y.to_array()
    fam = least_squares.a1a2_lss(b, a1, a2, y, tol)
    u0 = fam.canonical
    samples = []
    rng = np.random.default_rng(req.seed)
    for _ in range(req.samples):
        z1 = _sample_parameters(rng, fam.fam_null.param_shape)
        z2 = _sample_parameters(rng, fam.fam_range.param_shape)
        u = fam.member(z1, z2, tol)
        samples.append(
            {
                "member": matrix_payload(u),
                "residual_seminorm": _num(linalg.seminorm(a2, b @ u - y, tol)),
                "input_seminorm": _num(linalg.seminorm(a1, u, tol)),
                "euclidean_norm": _num(fro(u)),
            }
        )
    results = {
        "optimal": matrix_payload(u0),
        "family_null": _family_dims(fam.fam_null),
        "family_range": _family_dims(fam.fam_range),
    }
    if samples:
        results["samples"] = samples
    return Report(
        command="alss",
        inputs=_digests(b=b, a1=a1, a2=a2, y=y),
        tolerances=req.tol,
        seed=req.seed if req.samples else None,
        results=results,
        diagnostics={
            "residual_seminorm": _num(linalg.seminorm(a2, b @ u0 - y, tol)),
            "input_seminorm": _num(linalg.seminorm(a1, u0, tol)),
            "euclidean_norm": _num(fro(u0)),
            "rhs_in_range": fam.rhs_in_range,
            "zero_particular": fam.zero_particular,
        },
        verdict="exact-solution" if fam.rhs_in_range else "least-squares",
    )


def _handle_blue(req: BlueRequest) -> Report:
    tol = _tol(req)
    b, v2, c = req.b.to_array(), req.v2.to_array(), req.c.to_array()
    res = least_squares.blue(b, v2, c, tol)
    return Report(
        command="blue",
        inputs=_digests(b=b, v2=v2, c=c),
        tolerances=req.tol,
        results={
            "estimator": matrix_payload(res.estimator),
            "objective": _num(res.objective),
            "family": _family_dims(res.family),
        },
        diagnostics={"feasibility_residual": _num(res.feasibility_residual)},
        verdict="ok",
    )


def _handle_verify(req: VerifyRequest) -> Report:
    tol = _tol(req)
    b, a1, a2, c = req.b.to_array(), req.a1.to_array(), req.a2.to_array(), req.c.to_array()
    res = weighted_inverse.verify_gi(b, a1, a2, c, tol)
    return Report(
        command="verify",
        inputs=_digests(b=b, a1=a1, a2=a2, c=c),
        tolerances=req.tol,
        results={"max_residual": _num(res.max_residual)},
        diagnostics={"residuals": {k: _num(v) for k, v in res.as_dict().items()}},
        verdict="member" if res.is_member else "not-member",
    )


_HANDLERS = {
    "pinv": _handle_pinv,
    "wpinv": _handle_wpinv,
    "compat": _handle_compat,
    "oblique": _handle_oblique,
    "lss": _handle_lss,
    "alss": _handle_alss,
    "blue": _handle_blue,
    "verify": _handle_verify,
}


def run_command(command: str, request: BaseModel) -> Report:
    """Dispatch a validated request model to its command handler."""
    try:
        handler = _HANDLERS[command]
    except KeyError:
        raise ValueError(f"unknown command {command!r}") from None
    return handler(request)
