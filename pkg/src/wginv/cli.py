"""Command-line front end.

The CLI contains no numerics: it parses matrix/vector files into request
payloads, dispatches them either to the in-process handlers (default) or
to a running service (``--server``), and writes the JSON report.

Exit codes: 0 success, 1 I/O or parse errors, 2 mathematical infeasibility
(out-of-range targets, failed subspace preconditions), 3 numerical
incompatibility or decomposition failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import ParseError, WginvError
from .io import dump_report, parse_matrix_file, parse_vector_file
from .service.app import error_code
from .service.handlers import run_command
from .service.schemas import REQUEST_TYPES, Report

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_INCOMPATIBLE = 3

_EXIT_BY_CODE = {
    "parse": EXIT_INPUT,
    "invalid-input": EXIT_INPUT,
    "infeasible": EXIT_INFEASIBLE,
    "no-solution": EXIT_INFEASIBLE,
    "precondition": EXIT_INFEASIBLE,
    "direct-sum": EXIT_INFEASIBLE,
    "not-psd": EXIT_INFEASIBLE,
    "incompatible": EXIT_INCOMPATIBLE,
    "numerical-failure": EXIT_INCOMPATIBLE,
}

# per command: (flag, payload field, is_vector)
_COMMAND_INPUTS = {
    "pinv": [("--B", "b", False)],
    "wpinv": [("--B", "b", False), ("--A1", "a1", False), ("--A2", "a2", False)],
    "compat": [("--A", "a", False), ("--S", "s", False)],
    "oblique": [("--B", "b", False), ("--P", "p", False), ("--Q", "q", False)],
    "lss": [("--B", "b", False), ("--A2", "a2", False), ("--y", "y", True)],
    "alss": [
        ("--B", "b", False),
        ("--A1", "a1", False),
        ("--A2", "a2", False),
        ("--y", "y", True),
    ],
    "blue": [("--B", "b", False), ("--V2", "v2", False), ("--c", "c", True)],
    "verify": [
        ("--B", "b", False),
        ("--A1", "a1", False),
        ("--A2", "a2", False),
        ("--C", "c", False),
    ],
}

_SAMPLED_COMMANDS = {"wpinv", "alss"}

_COMMAND_HELP = {
    "pinv": "Moore-Penrose pseudoinverse with residual diagnostics",
    "wpinv": "canonical weighted generalized inverse and its family",
    "compat": "weight/subspace compatibility and canonical projection",
    "oblique": "generalized inverse with prescribed projections",
    "lss": "seminorm least-squares solution set",
    "alss": "two-stage seminorm least squares and optimal solution",
    "blue": "minimize a PSD quadratic form under linear constraints",
    "verify": "residual check of a candidate weighted inverse",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wginv",
        description="Weighted generalized inverses, oblique projections and seminorm least squares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command, inputs in _COMMAND_INPUTS.items():
        p = sub.add_parser(command, help=_COMMAND_HELP[command])
        for flag, field, is_vector in inputs:
            kind = "vector" if is_vector else "matrix"
            p.add_argument(flag, dest=f"input_{field}", required=True, metavar="FILE",
                           help=f"{kind} file (CSV or Matrix Market)")
        p.add_argument("--rank-tol", type=float, default=1e-12,
                       help="relative singular-value cutoff (default 1e-12)")
        p.add_argument("--res-tol", type=float, default=1e-8,
                       help="relative residual acceptance threshold (default 1e-8)")
        p.add_argument("--output", "-o", metavar="FILE", help="write the JSON report here instead of stdout")
        p.add_argument("--pretty", action="store_true", help="indent the JSON report")
        p.add_argument("--server", metavar="URL", help="POST the request to a running wginv service")
        if command in _SAMPLED_COMMANDS:
            p.add_argument("--samples", type=int, default=0,
                           help="number of deterministically sampled family members to report")
            p.add_argument("--seed", type=int, default=0, help="seed for the sampled members")
    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _array_payload(arr: np.ndarray) -> dict:
    if np.iscomplexobj(arr):
        return {"data": arr.real.tolist(), "imag": arr.imag.tolist()}
    return {"data": arr.tolist()}


def _build_request(args: argparse.Namespace):
    payload: dict = {}
    for _, field, is_vector in _COMMAND_INPUTS[args.command]:
        path = getattr(args, f"input_{field}")
        arr = parse_vector_file(path) if is_vector else parse_matrix_file(path)
        payload[field] = _array_payload(arr)
    payload["tol"] = {"rank_rel": args.rank_tol, "residual_rel": args.res_tol}
    if args.command in _SAMPLED_COMMANDS:
        payload["samples"] = args.samples
        payload["seed"] = args.seed
    return REQUEST_TYPES[args.command](**payload)


def _post_remote(server: str, command: str, request) -> Report:
    import httpx

    url = server.rstrip("/") + f"/v1/{command}"
    try:
        response = httpx.post(url, json=request.model_dump(), timeout=60.0)
    except httpx.HTTPError as exc:
        raise ParseError(f"cannot reach {url}: {exc}") from exc
    if response.status_code == 200:
        return Report.model_validate(response.json())
    try:
        body = response.json()
        code = body["error"]["code"]
        message = body["error"]["message"]
    except Exception:
        code, message = "invalid-input", response.text
    raise _RemoteError(code, message)


class _RemoteError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _emit(report: Report, args: argparse.Namespace) -> None:
    text = dump_report(report.model_dump(), pretty=args.pretty)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        uvicorn.run("wginv.service.app:app", host=args.host, port=args.port)
        return EXIT_OK
    try:
        request = _build_request(args)
        if args.server:
            report = _post_remote(args.server, args.command, request)
        else:
            report = run_command(args.command, request)
    except _RemoteError as exc:
        print(f"wginv {args.command}: error [{exc.code}]: {exc}", file=sys.stderr)
        return _EXIT_BY_CODE.get(exc.code, EXIT_INPUT)
    except WginvError as exc:
        code = error_code(exc)
        print(f"wginv {args.command}: error [{code}]: {exc}", file=sys.stderr)
        return _EXIT_BY_CODE.get(code, EXIT_INPUT)
    except (ValueError, OSError) as exc:
        print(f"wginv {args.command}: error [invalid-input]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        _emit(report, args)
    except OSError as exc:
        print(f"wginv {args.command}: error [io]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
