"""HTTP surface: a thin FastAPI wrapper over the service layer.

Input errors surface as HTTP 400 with the same report body the CLI
prints; verdict outcomes are plain 200s, with the exit semantics encoded
in the report itself.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import __version__
from .reports import (
    EnCheckRequest,
    SweepReport,
    SweepRequest,
    TableReport,
    TableRequest,
    VerdictReport,
    VerifyRequest,
)
from .service import run_en_check, run_sweep, run_table, run_verify

app = FastAPI(
    title="azumaya",
    version=__version__,
    description=(
        "Exact-arithmetic Azumaya verdicts for cleft extensions of "
        "finite-dimensional Hopf algebras."
    ),
)


def _respond(report):
    if report.error is not None:
        return JSONResponse(status_code=400, content=report.model_dump())
    return report


@app.get("/v1/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/v1/en-check", response_model=VerdictReport)
def en_check(req: EnCheckRequest):
    return _respond(run_en_check(req))


@app.post("/v1/verify", response_model=VerdictReport)
def verify(req: VerifyRequest):
    return _respond(run_verify(req))


@app.post("/v1/table", response_model=TableReport)
def table(req: TableRequest):
    return _respond(run_table(req))


@app.post("/v1/sweep", response_model=SweepReport)
def sweep(req: SweepRequest):
    return _respond(run_sweep(req))
