"""Matrix/vector file parsing and canonical JSON report serialization.

Input formats: comma-separated values (one matrix row per line, real or
complex entries) and Matrix Market (array or coordinate, real or complex,
densified on read). Reports are serialized deterministically: sorted keys,
fixed separators, no NaN/Inf, negative zero normalized away, so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np
import scipy.io
import scipy.sparse

from .errors import ParseError

__all__ = [
    "parse_matrix_file",
    "parse_vector_file",
    "matrix_payload",
    "matrix_digest",
    "dump_report",
]


def _parse_token(token: str, path: str, lineno: int):
    text = token.strip()
    if not text:
        raise ParseError(f"{path}:{lineno}: empty field")
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise ParseError(f"{path}:{lineno}: cannot parse number {text!r}") from None


def _parse_csv(text: str, path: str) -> np.ndarray:
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = [_parse_token(tok, path, lineno) for tok in stripped.split(",")]
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise ParseError(
                f"{path}:{lineno}: row has {len(values)} fields, expected {width}"
            )
        rows.append(values)
    if not rows:
        raise ParseError(f"{path}: no numeric rows found")
    return np.array(rows)


def parse_matrix_file(path) -> np.ndarray:
    """Read a dense matrix from a CSV or Matrix Market file.

    The format is sniffed from the content: a ``%%MatrixMarket`` banner
    selects the Matrix Market reader, anything else is parsed as CSV.
    Raises ``ParseError`` with the offending line for malformed input.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if text.lstrip().startswith("%%MatrixMarket"):
        try:
            matrix = scipy.io.mmread(str(path))
        except Exception as exc:
            raise ParseError(f"{path}: invalid Matrix Market file: {exc}") from exc
        if scipy.sparse.issparse(matrix):
            matrix = matrix.toarray()
        arr = np.asarray(matrix)
    else:
        arr = _parse_csv(text, str(path))
    if arr.ndim != 2:
        raise ParseError(f"{path}: expected a 2-dimensional matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ParseError(f"{path}: matrix contains non-finite entries")
    return arr


def parse_vector_file(path) -> np.ndarray:
    """Read a vector (single row or single column) from a CSV or Matrix Market file."""
    arr = parse_matrix_file(path)
    if 1 not in arr.shape:
        raise ParseError(f"{path}: expected a vector, got shape {arr.shape}")
    return arr.reshape(-1)


def _clean_float(value: float) -> float:
    # +0.0 normalizes negative zero so reports are byte-stable
    return float(value) + 0.0


def matrix_payload(arr: np.ndarray):
    """JSON-friendly representation: nested lists, complex split into real/imag."""
    arr = np.asarray(arr)
    if arr.ndim == 1:
        if np.iscomplexobj(arr):
            return {
                "real": [_clean_float(v) for v in arr.real],
                "imag": [_clean_float(v) for v in arr.imag],
            }
        return [_clean_float(v) for v in arr]
    if np.iscomplexobj(arr):
        return {
            "real": [[_clean_float(v) for v in row] for row in arr.real],
            "imag": [[_clean_float(v) for v in row] for row in arr.imag],
        }
    return [[_clean_float(v) for v in row] for row in arr]


def matrix_digest(arr: np.ndarray) -> str:
    """SHA-256 of the canonical JSON form of the array content."""
    payload = {"shape": list(np.asarray(arr).shape), "data": matrix_payload(arr)}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def dump_report(report: dict, pretty: bool = False) -> str:
    """Serialize a report dict deterministically; trailing newline included."""
    if pretty:
        text = json.dumps(report, sort_keys=True, indent=2, allow_nan=False)
    else:
        text = json.dumps(report, sort_keys=True, separators=(",", ":"), allow_nan=False)
    return text + "\n"
