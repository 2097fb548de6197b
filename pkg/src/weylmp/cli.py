"""Command-line front end, implemented as a thin client of the HTTP service.

Every subcommand builds a JSON request and sends it to the verification
service: to a remote instance when ``--server`` is given, otherwise to the
FastAPI app mounted in-process through an ASGI transport (no network, same
wire format).  Exit codes: 0 all pass / success, 1 verification failure,
2 usage or parse error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import asyncio
import csv
import io
import json
import sys

import click
import httpx

from .identities import DEFAULT_WORD_CAP

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _call_service(server: str | None, method: str, path: str, payload: dict | None):
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.request(method, path, json=payload)

    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())

    async def go():
        async with httpx.AsyncClient(
            transport=transport, base_url="http://weylmp.internal", timeout=600.0
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _payload(server: str | None, method: str, path: str, request: dict | None = None) -> dict:
    try:
        response = _call_service(server, method, path, request)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    if response.status_code == 200:
        return response.json()
    code, message = "error", response.text
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict):
        code = detail.get("code", "error")
        message = detail.get("message", "")
        if detail.get("line") is not None:
            message = f"{message} (line {detail['line']}, column {detail['column']})"
    elif isinstance(detail, list):  # pydantic validation report
        code = "usage_error"
        message = "; ".join(str(item.get("msg", item)) for item in detail)
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_CAP if code == "cap_exceeded" else EXIT_USAGE)


def _parse_range(text: str | None, name: str) -> list[int] | None:
    if text is None:
        return None
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise click.UsageError(f"--{name} expects A..B or a single integer, got {text!r}")
    if lo < 0 or hi < lo:
        raise click.UsageError(f"--{name} range {text!r} is empty or negative")
    return [lo, hi]


def _json_line(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


def _emit_csv(rows: list[dict]) -> None:
    if not rows:
        return
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, restval="")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    click.echo(buffer.getvalue(), nl=False)


def _flatten_report(report: dict) -> dict:
    flat = {"identity": report["identity"]}
    flat.update(report["params"])
    for key in ("verdict", "lhs", "rhs", "detail", "code"):
        flat[key] = report[key]
    return flat


def _render_reports(body: dict, fmt: str) -> None:
    reports = body["reports"]
    if fmt == "json":
        for report in reports:
            click.echo(_json_line(report))
        return
    if fmt == "csv":
        _emit_csv([_flatten_report(report) for report in reports])
        return
    for report in reports:
        params = " ".join(f"{key}={value}" for key, value in report["params"].items())
        verdict = report["verdict"]
        line = f"{report['identity']:<15} {params:<28} {verdict}"
        click.echo(line)
        if verdict != "pass":
            if report["detail"]:
                click.echo(f"    detail: {report['detail']}")
            if report["lhs"] or report["rhs"]:
                click.echo(f"    lhs: {report['lhs']}")
                click.echo(f"    rhs: {report['rhs']}")
    click.echo(
        f"{len(reports)} cells: {body['passed']} pass, "
        f"{body['failed']} fail, {body['errors']} error"
    )


def _reports_exit_code(body: dict) -> int:
    if body["failed"]:
        return EXIT_FAIL
    if body["errors"]:
        cap_only = all(
            report["code"] == "cap_exceeded"
            for report in body["reports"]
            if report["verdict"] == "error"
        )
        return EXIT_CAP if cap_only else EXIT_FAIL
    return EXIT_OK


def shared_options(command):
    command = click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json", "csv"]),
        default="text",
        show_default=True,
        help="output format",
    )(command)
    command = click.option(
        "--cap",
        type=int,
        default=DEFAULT_WORD_CAP,
        show_default=True,
        help="word-enumeration cap for brute-force sums",
    )(command)
    command = click.option("--seed", type=int, default=0, show_default=True,
                           help="seed for randomized sweeps")(command)
    command = click.option("--server", default=None, metavar="URL",
                           help="base URL of a running service (in-process app when omitted)")(command)
    return command


@click.group()
def main():
    """Exact normal ordering and identity verification in the Weyl algebra."""


@main.command()
@click.argument("expression")
@shared_options
def normalize(expression, fmt, cap, seed, server):
    """Normalize EXPRESSION into canonical q-before-p form."""
    body = _payload(server, "POST", "/normalize", {"expression": expression})
    if fmt == "json":
        click.echo(_json_line(body))
    elif fmt == "csv":
        _emit_csv([body])
    else:
        click.echo(body["canonical"])


@main.command()
@click.argument("identity")
@click.option("--m", "m_range", default=None, metavar="A..B",
              help="range of the first sweep parameter")
@click.option("--n", "n_range", default=None, metavar="C..D",
              help="range of the second sweep parameter")
@shared_options
def verify(identity, m_range, n_range, fmt, cap, seed, server):
    """Sweep one identity checker over a parameter grid.

    IDENTITY is one of THM1, THM2, LEM1, LEM2_COMMUTANT, PROP_EXPAN,
    LEM3_1, LEM3_2, PROP_GENFUN, PROP_TMN, REMARK_14, REMARK_15.
    """
    request = {
        "identity": identity.upper(),
        "m": _parse_range(m_range, "m"),
        "n": _parse_range(n_range, "n"),
        "cap": cap,
        "seed": seed,
    }
    body = _payload(server, "POST", "/verify", request)
    _render_reports(body, fmt)
    sys.exit(_reports_exit_code(body))


@main.command()
@click.option("--max-degree", type=int, default=6, show_default=True,
              help="largest total degree m+n in the grids")
@click.option("--trials", type=int, default=10, show_default=True,
              help="randomized commutant trials")
@shared_options
def suite(max_degree, trials, fmt, cap, seed, server):
    """Run every identity checker over its default grid."""
    request = {
        "max_total_degree": max_degree,
        "cap": cap,
        "commutant_trials": trials,
        "seed": seed,
    }
    body = _payload(server, "POST", "/suite", request)
    _render_reports(body, fmt)
    sys.exit(_reports_exit_code(body))


@main.command()
@click.argument("kind", type=click.Choice(["tmn", "mp"]))
@click.option("--max", "max_value", type=int, default=4, show_default=True,
              help="largest total degree (tmn) or polynomial degree (mp)")
@click.option("--alpha", default="1/2", show_default=True,
              help="rational parameter for the mp table")
@shared_options
def table(kind, max_value, alpha, fmt, cap, seed, server):
    """Tabulate word sums T_{m,n} or Meixner-Pollaczek coefficient rows."""
    request = {"kind": kind, "max": max_value, "alpha": alpha, "cap": cap}
    body = _payload(server, "POST", "/table", request)
    rows = body["tmn_rows"] if kind == "tmn" else body["mp_rows"]
    if fmt == "json":
        for row in rows:
            click.echo(_json_line(row))
    elif fmt == "csv":
        flat = []
        for row in rows:
            row = dict(row)
            if "coefficients" in row:
                row["coefficients"] = " ".join(row["coefficients"])
            flat.append(row)
        _emit_csv(flat)
    else:
        for row in rows:
            if kind == "tmn":
                click.echo(f"T[{row['m']},{row['n']}] ({row['words']} words) = {row['canonical']}")
            else:
                click.echo(f"Q_{row['n']}^({row['alpha']}) = {row['rendered']}")


@main.command()
@click.option("--max", "max_value", type=int, default=5, show_default=True,
              help="largest total degree m+n benchmarked")
@click.option("--reps", type=int, default=3, show_default=True,
              help="repetitions per cell (best time is reported)")
@shared_options
def bench(max_value, reps, fmt, cap, seed, server):
    """Time the rook-formula normalizer against single-step rewriting."""
    request = {"max": max_value, "reps": reps, "cap": cap}
    body = _payload(server, "POST", "/bench", request)
    rows = body["rows"]
    if fmt == "json":
        for row in rows:
            click.echo(_json_line(row))
    elif fmt == "csv":
        _emit_csv(rows)
    else:
        click.echo(f"{'m':>3} {'n':>3} {'words':>7} {'closed_ms':>11} {'rewrite_ms':>11} {'speedup':>8}")
        for row in rows:
            click.echo(
                f"{row['m']:>3} {row['n']:>3} {row['words']:>7} "
                f"{row['closed_ms']:>11.3f} {row['rewrite_ms']:>11.3f} {row['speedup']:>8.2f}"
            )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the verification service under uvicorn."""
    import uvicorn

    uvicorn.run("weylmp.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
