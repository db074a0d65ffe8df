"""Thin command-line client for the HTTP service.

Commands talk to an in-process instance of the service by default; pass
--server to target a running deployment instead.  Exit codes are a stable
contract for scripting: 0 success (and all checks passed), 1 verification
failure, 2 usage error, 3 numerical failure or unreachable server.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import io
import json
import sys

import httpx

FORMATS = ("pretty-table", "csv", "json")

COMPUTE_COLUMNS = ("n", "alpha", "c", "c_squared", "residual", "iterations")
BOUNDS_COLUMNS = ("n", "alpha", "id", "value", "applicable", "hypothesis")
VERIFY_COLUMNS = ("suite", "n", "alpha", "margin", "pass", "detail")
ASYMPTOTIC_COLUMNS = (
    "alpha",
    "nu",
    "j_zero",
    "c_asymptotic",
    "c_squared_lower",
    "c_squared_upper",
    "bound_ratio",
    "extrapolated",
    "relative_difference",
    "n_max",
)


class _ClientError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagmark",
        description="Markov constants for the Laguerre-weighted L2 norm: computation, bounds, sweeps, asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=FORMATS, default="pretty-table")
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")
        p.add_argument("--server", default=None, help="base URL of a running service (default: in-process)")

    p_compute = sub.add_parser("compute", help="best constant c_n(alpha) via the dominant eigenvalue")
    p_compute.add_argument("--n", type=int, required=True)
    p_compute.add_argument("--alpha", type=float, required=True)
    p_compute.add_argument("--tol", type=float, default=1e-12)
    add_common(p_compute)

    p_bounds = sub.add_parser("bounds", help="all closed-form bounds for one (n, alpha)")
    p_bounds.add_argument("--n", type=int, required=True)
    p_bounds.add_argument("--alpha", type=float, required=True)
    p_bounds.add_argument("--computed", action="store_true", help="also compute c^2 and check the sandwich")
    p_bounds.add_argument("--tol", type=float, default=1e-12)
    add_common(p_bounds)

    p_verify = sub.add_parser("verify", help="run one verification suite over a grid")
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--n-min", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--alpha-list", default=None, help="comma-separated alpha values")
    p_verify.add_argument("--eps-list", default=None, help="comma-separated eps values (cor13 only)")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=100)
    add_common(p_verify)

    p_asym = sub.add_parser("asymptotic", help="large-degree limit of c_n/n with bounds and extrapolation")
    p_asym.add_argument("--alpha", type=float, required=True)
    p_asym.add_argument("--n-max", type=int, default=2000)
    p_asym.add_argument("--tol", type=float, default=1e-12)
    add_common(p_asym)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _post(args, path: str, payload: dict):
    async def call(client: httpx.AsyncClient):
        response = await client.post(path, json=payload)
        try:
            body = response.json()
        except ValueError:
            body = {"detail": response.text}
        return response.status_code, body

    async def remote():
        async with httpx.AsyncClient(base_url=args.server, timeout=600.0) as client:
            return await call(client)

    async def local():
        from .service.app import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://lagmark.internal", timeout=None) as client:
            return await call(client)

    try:
        status, body = asyncio.run(remote() if args.server else local())
    except httpx.HTTPError as exc:
        raise _ClientError(3, f"cannot reach server: {exc}")
    if status == 422:
        raise _ClientError(2, f"invalid request: {json.dumps(body.get('detail', body))}")
    if status >= 500:
        raise _ClientError(3, f"numerical failure: {json.dumps(body.get('detail', body))}")
    if status >= 400:
        raise _ClientError(2, f"request rejected ({status}): {json.dumps(body)}")
    return body


def _fmt_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return "" if value is None else str(value)


def _fmt_pretty(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return "" if value is None else str(value)


def _render(columns, rows, fmt: str, footer: str = "") -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt_cell(row.get(col)) for col in columns])
        return buffer.getvalue()
    cells = [[_fmt_pretty(row.get(col)) for col in columns] for row in rows]
    widths = [max(len(col), *(len(r[i]) for r in cells)) if cells else len(col) for i, col in enumerate(columns)]
    lines = ["  ".join(col.ljust(widths[i]) for i, col in enumerate(columns))]
    lines.append("  ".join("-" * widths[i] for i in range(len(columns))))
    for r in cells:
        lines.append("  ".join(r[i].ljust(widths[i]) for i in range(len(columns))))
    text = "\n".join(lines) + "\n"
    if footer:
        text += footer + "\n"
    return text


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_float_list(raw: str | None):
    if raw is None:
        return None
    try:
        return [float(item) for item in raw.split(",") if item.strip() != ""]
    except ValueError:
        raise _ClientError(2, f"expected a comma-separated list of numbers, got {raw!r}")


def _cmd_compute(args) -> int:
    body = _post(args, "/compute", {"n": args.n, "alpha": args.alpha, "tol": args.tol})
    row = {col: body[col] for col in COMPUTE_COLUMNS}
    _emit(args, _render(COMPUTE_COLUMNS, [row], args.format))
    return 0


def _cmd_bounds(args) -> int:
    payload = {"n": args.n, "alpha": args.alpha, "include_computed": args.computed, "tol": args.tol}
    body = _post(args, "/bounds", payload)
    rows = [
        {
            "n": body["n"],
            "alpha": body["alpha"],
            "id": entry["id"],
            "value": entry["value"],
            "applicable": entry["applicable"],
            "hypothesis": entry["hypothesis"],
        }
        for entry in body["bounds"]
    ]
    if body.get("computed_c_squared") is not None:
        rows.append(
            {
                "n": body["n"],
                "alpha": body["alpha"],
                "id": "computed_c_squared",
                "value": body["computed_c_squared"],
                "applicable": True,
                "hypothesis": "eigenvalue route",
            }
        )
    _emit(args, _render(BOUNDS_COLUMNS, rows, args.format))
    return 0


def _cmd_verify(args) -> int:
    payload = {"suite": args.suite, "seed": args.seed, "trials": args.trials}
    if args.n_min is not None:
        payload["n_min"] = args.n_min
    if args.n_max is not None:
        payload["n_max"] = args.n_max
    alpha_values = _parse_float_list(args.alpha_list)
    if alpha_values is not None:
        if args.suite == "cor13":  # for the limit suite the alphas are the large probes
            payload["alpha_big"] = alpha_values
        else:
            payload["alpha_values"] = alpha_values
    eps_list = _parse_float_list(args.eps_list)
    if eps_list is not None:
        payload["eps_list"] = eps_list
    body = _post(args, "/verify", payload)
    rows = [
        {
            "suite": body["suite"],
            "n": case["n"],
            "alpha": case["alpha"],
            "margin": case["margin"],
            "pass": case["pass"],
            "detail": case["detail"],
        }
        for case in body["cases"]
    ]
    footer = ""
    if args.format == "pretty-table":
        footer = (
            f"all_pass={_fmt_pretty(body['all_pass'])} worst_margin={_fmt_pretty(body.get('worst_margin'))} "
            f"skipped={body['skipped']}"
        )
    _emit(args, _render(VERIFY_COLUMNS, rows, args.format, footer=footer))
    return 0 if body["all_pass"] else 1


def _cmd_asymptotic(args) -> int:
    body = _post(args, "/asymptotic", {"alpha": args.alpha, "n_max": args.n_max, "tol": args.tol})
    row = {
        "alpha": body["alpha"],
        "nu": body["nu"],
        "j_zero": body["j_zero"],
        "c_asymptotic": body["c_asymptotic"],
        "c_squared_lower": body["c_squared_lower"],
        "c_squared_upper": body["c_squared_upper"],
        "bound_ratio": body["bound_ratio"],
        "extrapolated": body["extrapolated"],
        "relative_difference": body["relative_difference"],
        "n_max": args.n_max,
    }
    _emit(args, _render(ASYMPTOTIC_COLUMNS, [row], args.format))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("lagmark.service.app:app", host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "bounds": _cmd_bounds,
        "verify": _cmd_verify,
        "asymptotic": _cmd_asymptotic,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except _ClientError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
