"""FastAPI application exposing the solver commands as POST endpoints."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..errors import (
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
from .handlers import run_command
from .schemas import (
    AlssRequest,
    BlueRequest,
    CompatRequest,
    ErrorResponse,
    LssRequest,
    ObliqueRequest,
    PinvRequest,
    Report,
    VerifyRequest,
    WpinvRequest,
)

# machine-readable error codes; the CLI maps them onto exit codes
ERROR_CODES: dict[type, str] = {
    ParseError: "parse",
    InfeasibleError: "infeasible",
    NoSolutionError: "no-solution",
    PreconditionError: "precondition",
    DirectSumError: "direct-sum",
    NotPsdError: "not-psd",
    IncompatibleError: "incompatible",
    NumericalFailureError: "numerical-failure",
}


def error_code(exc: Exception) -> str:
    for klass, code in ERROR_CODES.items():
        if isinstance(exc, klass):
            return code
    return "invalid-input"


def create_app() -> FastAPI:
    app = FastAPI(
        title="wginv",
        description="Weighted generalized inverses, oblique projections and seminorm least squares",
        version="0.1.0",
    )

    @app.exception_handler(WginvError)
    async def _domain_error(_, exc: WginvError):
        return JSONResponse(
            status_code=422,
            content=ErrorResponse.model_validate(
                {"error": {"code": error_code(exc), "message": str(exc)}}
            ).model_dump(),
        )

    @app.exception_handler(ValueError)
    async def _value_error(_, exc: ValueError):
        return JSONResponse(
            status_code=400,
            content=ErrorResponse.model_validate(
                {"error": {"code": "invalid-input", "message": str(exc)}}
            ).model_dump(),
        )

    @app.get("/v1/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/v1/pinv", response_model=Report, responses={422: {"model": ErrorResponse}})
    def pinv(req: PinvRequest) -> Report:
        return run_command("pinv", req)

    @app.post("/v1/wpinv", response_model=Report, responses={422: {"model": ErrorResponse}})
    def wpinv(req: WpinvRequest) -> Report:
        return run_command("wpinv", req)

    @app.post("/v1/compat", response_model=Report, responses={422: {"model": ErrorResponse}})
    def compat(req: CompatRequest) -> Report:
        return run_command("compat", req)

    @app.post("/v1/oblique", response_model=Report, responses={422: {"model": ErrorResponse}})
    def oblique(req: ObliqueRequest) -> Report:
        return run_command("oblique", req)

    @app.post("/v1/lss", response_model=Report, responses={422: {"model": ErrorResponse}})
    def lss(req: LssRequest) -> Report:
        return run_command("lss", req)

    @app.post("/v1/alss", response_model=Report, responses={422: {"model": ErrorResponse}})
    def alss(req: AlssRequest) -> Report:
        return run_command("alss", req)

    @app.post("/v1/blue", response_model=Report, responses={422: {"model": ErrorResponse}})
    def blue(req: BlueRequest) -> Report:
        return run_command("blue", req)

    @app.post("/v1/verify", response_model=Report, responses={422: {"model": ErrorResponse}})
    def verify(req: VerifyRequest) -> Report:
        return run_command("verify", req)

    return app


app = create_app()
