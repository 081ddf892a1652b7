"""Pydantic request/response models for the computation service."""

from __future__ import annotations

from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator


class MatrixPayload(BaseModel):
    """Dense matrix as nested lists; ``imag`` adds a complex part entrywise."""

    data: list[list[float]]
    imag: Optional[list[list[float]]] = None

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixPayload":
        if not self.data or any(len(row) != len(self.data[0]) for row in self.data):
            raise ValueError("matrix rows must be nonempty and of equal length")
        if self.imag is not None:
            if len(self.imag) != len(self.data) or any(
                len(row) != len(self.data[0]) for row in self.imag
            ):
                raise ValueError("imag part must have the same shape as data")
        return self

    def to_array(self) -> np.ndarray:
        arr = np.array(self.data, dtype=float)
        if self.imag is not None:
            arr = arr + 1j * np.array(self.imag, dtype=float)
        return arr


class VectorPayload(BaseModel):
    """Dense vector as a flat list; ``imag`` adds a complex part entrywise."""

    data: list[float]
    imag: Optional[list[float]] = None

    @model_validator(mode="after")
    def _check_shape(self) -> "VectorPayload":
        if not self.data:
            raise ValueError("vector must be nonempty")
        if self.imag is not None and len(self.imag) != len(self.data):
            raise ValueError("imag part must have the same length as data")
        return self

    def to_array(self) -> np.ndarray:
        arr = np.array(self.data, dtype=float)
        if self.imag is not None:
            arr = arr + 1j * np.array(self.imag, dtype=float)
        return arr


class ToleranceParams(BaseModel):
    rank_rel: float = Field(default=1e-12, gt=0.0, lt=1.0)
    residual_rel: float = Field(default=1e-8, gt=0.0, lt=1.0)


class PinvRequest(BaseModel):
    b: MatrixPayload
    tol: ToleranceParams = ToleranceParams()


class WpinvRequest(BaseModel):
    b: MatrixPayload
    a1: MatrixPayload
    a2: MatrixPayload
    tol: ToleranceParams = ToleranceParams()
    samples: int = Field(default=0, ge=0, le=64)
    seed: int = 0


class CompatRequest(BaseModel):
    a: MatrixPayload
    s: MatrixPayload  # columns spanning the subspace
    tol: ToleranceParams = ToleranceParams()


class ObliqueRequest(BaseModel):
    b: MatrixPayload
    p: MatrixPayload  # idempotent, range equal to R(b)
    q: MatrixPayload  # idempotent, nullspace equal to N(b)
    tol: ToleranceParams = ToleranceParams()


class LssRequest(BaseModel):
    b: MatrixPayload
    a2: MatrixPayload
    y: VectorPayload
    tol: ToleranceParams = ToleranceParams()


class AlssRequest(BaseModel):
    b: MatrixPayload
    a1: MatrixPayload
    a2: MatrixPayload
    y: VectorPayload
    tol: ToleranceParams = ToleranceParams()
    samples: int = Field(default=0, ge=0, le=64)
    seed: int = 0


class BlueRequest(BaseModel):
    b: MatrixPayload
    v2: MatrixPayload
    c: VectorPayload
    tol: ToleranceParams = ToleranceParams()


class VerifyRequest(BaseModel):
    b: MatrixPayload
    a1: MatrixPayload
    a2: MatrixPayload
    c: MatrixPayload  # candidate inverse
    tol: ToleranceParams = ToleranceParams()


class Report(BaseModel):
    """Uniform response schema for every command.

    ``inputs`` maps each input name to a content digest, ``results`` holds
    the dense result arrays, ``diagnostics`` the residuals that accompany
    every numeric result, and ``verdict`` a short machine-readable outcome.
    """

    command: str
    inputs: dict[str, str]
    tolerances: ToleranceParams
    seed: Optional[int] = None
    results: dict[str, Any]
    diagnostics: dict[str, Any]
    verdict: str


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody


REQUEST_TYPES: dict[str, type[BaseModel]] = {
    "pinv": PinvRequest,
    "wpinv": WpinvRequest,
    "compat": CompatRequest,
    "oblique": ObliqueRequest,
    "lss": LssRequest,
    "alss": AlssRequest,
    "blue": BlueRequest,
    "verify": VerifyRequest,
}
