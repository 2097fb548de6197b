"""FastAPI service exposing normalization, verification, tables and benchmarks.

All endpoints are pure request/response computations over the core package;
the service holds no state, so any number of clients may hit it
concurrently.  Structured errors use a stable ``code`` field: parse and
usage problems map to HTTP 400, exceeded enumeration caps to HTTP 409.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bench import run_bench
from ..identities import (
    CapExceededError,
    IDENTITY_INFO,
    IDENTITY_TAGS,
    SuiteCaps,
    run_suite,
    sweep,
    tmn_bruteforce,
)
from ..parsing import ParseError, parse_element
from ..polynomials import mp_real_form
from ..scalars import binomial
from ..weyl import render
from .models import (
    BenchRequest,
    BenchResponse,
    BenchRowModel,
    IdentityDescription,
    MpRow,
    NormalizeRequest,
    NormalizeResponse,
    ReportModel,
    SuiteRequest,
    TableRequest,
    TableResponse,
    TmnRow,
    VerifyRequest,
    VerifyResponse,
)


def _verify_response(identity: str, reports) -> VerifyResponse:
    models = [ReportModel(**report.as_dict()) for report in reports]
    passed = sum(r.verdict == "pass" for r in models)
    failed = sum(r.verdict == "fail" for r in models)
    errors = sum(r.verdict == "error" for r in models)
    return VerifyResponse(
        identity=identity,
        reports=models,
        passed=passed,
        failed=failed,
        errors=errors,
        all_pass=failed == 0 and errors == 0,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="weylmp",
        version=__version__,
        description=(
            "Exact-arithmetic verification of operator-ordering identities in "
            "the Weyl algebra with generators p, q and pq - qp = 1."
        ),
    )

    @app.exception_handler(ParseError)
    async def _parse_error(_: Request, exc: ParseError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={
                "detail": {
                    "code": "parse_error",
                    "message": exc.message,
                    "line": exc.line,
                    "column": exc.column,
                }
            },
        )

    @app.exception_handler(CapExceededError)
    async def _cap_error(_: Request, exc: CapExceededError) -> JSONResponse:
        return JSONResponse(
            status_code=409,
            content={"detail": {"code": "cap_exceeded", "message": str(exc)}},
        )

    @app.exception_handler(ValueError)
    async def _value_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"code": "usage_error", "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/identities", response_model=list[IdentityDescription])
    def identities() -> list[IdentityDescription]:
        out = []
        for tag in IDENTITY_TAGS:
            info = IDENTITY_INFO[tag]
            out.append(
                IdentityDescription(
                    tag=info.tag,
                    summary=info.summary,
                    first_param=info.m_name,
                    first_default=info.m_default,
                    second_param=info.n_name,
                    second_default=info.n_default,
                    fixed=info.fixed,
                )
            )
        return out

    @app.post("/normalize", response_model=NormalizeResponse)
    def normalize(request: NormalizeRequest) -> NormalizeResponse:
        element = parse_element(request.expression)
        return NormalizeResponse(input=request.expression, canonical=render(element))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(request: VerifyRequest) -> VerifyResponse:
        reports = sweep(
            request.identity,
            m_range=request.m,
            n_range=request.n,
            cap=request.cap,
            seed=request.seed,
        )
        return _verify_response(request.identity, reports)

    @app.post("/suite", response_model=VerifyResponse)
    def suite(request: SuiteRequest) -> VerifyResponse:
        caps = SuiteCaps(
            word_cap=request.cap,
            commutant_trials=request.commutant_trials,
            seed=request.seed,
        )
        reports = run_suite(request.max_total_degree, caps)
        return _verify_response("ALL", reports)

    @app.post("/table", response_model=TableResponse)
    def table(request: TableRequest) -> TableResponse:
        if request.kind == "tmn":
            rows = []
            for total in range(request.max + 1):
                for m in range(total + 1):
                    n = total - m
                    element = tmn_bruteforce(m, n, request.cap)
                    rows.append(
                        TmnRow(
                            m=m, n=n, words=binomial(total, m), canonical=render(element)
                        )
                    )
            return TableResponse(kind="tmn", tmn_rows=rows)
        alpha = Fraction(request.alpha)
        rows = []
        for n in range(request.max + 1):
            poly = mp_real_form(n, alpha)
            rows.append(
                MpRow(
                    n=n,
                    alpha=str(alpha),
                    coefficients=[str(c) for c in poly.coefficients()],
                    rendered=str(poly),
                )
            )
        return TableResponse(kind="mp", mp_rows=rows)

    @app.post("/bench", response_model=BenchResponse)
    def bench(request: BenchRequest) -> BenchResponse:
        rows = run_bench(request.max, request.reps, request.cap)
        return BenchResponse(rows=[BenchRowModel(**row.as_dict()) for row in rows])

    return app


app = create_app()
