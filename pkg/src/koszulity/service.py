"""HTTP service exposing the report commands.

Each endpoint accepts file content (never paths), runs the corresponding
report builder, and returns {exit_code, lines}.  The CLI posts here either
in-process or over the network; anything else that talks JSON can too.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI
from pydantic import BaseModel

from . import reports
from .relations import InternalCheckError


class CommandResponse(BaseModel):
    exit_code: int
    lines: list[str]


class CheckRequest(BaseModel):
    text: str
    tsv: bool = False


class AxiomsRequest(BaseModel):
    text: str
    tsv: bool = False


class KoszulRequest(BaseModel):
    text: str
    field: str = "q"
    ideal: bool = False
    tsv: bool = False


class TorRequest(BaseModel):
    text: str
    field: str = "q"
    module: str = "ring"
    backend: str = "topo"
    tsv: bool = False


class MatricesRequest(BaseModel):
    text: str
    field: str = "q"
    tsv: bool = False


class QuadraticRequest(BaseModel):
    text: str
    tsv: bool = False


class SeqcmRequest(BaseModel):
    facets: Optional[str] = None
    file_text: Optional[str] = None
    field: str = "q"
    tsv: bool = False


class SrRequest(BaseModel):
    facets: str
    vertices: int
    field: str = "q"
    dual: bool = False
    tsv: bool = False


class FixtureRequest(BaseModel):
    name: str
    tsv: bool = False


app = FastAPI(
    title="koszulity",
    description="Koszulness, quadraticity and sequential Cohen-Macaulayness "
                "for reduced incidence algebras of finite posets.")


def _respond(fn, *args, **kwargs):
    try:
        code, lines = fn(*args, **kwargs)
    except InternalCheckError as e:
        return CommandResponse(exit_code=reports.MISMATCH,
                               lines=[f"INTERNAL-ERROR: {e}"])
    return CommandResponse(exit_code=code, lines=lines)


@app.get("/")
def index():
    return {"commands": sorted(
        r.path.lstrip("/") for r in app.routes
        if getattr(r, "methods", None) == {"POST"})}


@app.post("/check", response_model=CommandResponse)
def check(req: CheckRequest):
    return _respond(reports.run_check, req.text, req.tsv)


@app.post("/axioms", response_model=CommandResponse)
def axioms(req: AxiomsRequest):
    return _respond(reports.run_axioms, req.text, req.tsv)


@app.post("/koszul", response_model=CommandResponse)
def koszul(req: KoszulRequest):
    return _respond(reports.run_koszul, req.text, req.field, req.ideal,
                    req.tsv)


@app.post("/tor", response_model=CommandResponse)
def tor(req: TorRequest):
    return _respond(reports.run_tor, req.text, req.field, req.module,
                    req.backend, req.tsv)


@app.post("/matrices", response_model=CommandResponse)
def matrices(req: MatricesRequest):
    return _respond(reports.run_matrices, req.text, req.field, req.tsv)


@app.post("/quadratic", response_model=CommandResponse)
def quadratic(req: QuadraticRequest):
    return _respond(reports.run_quadratic, req.text, req.tsv)


@app.post("/seqcm", response_model=CommandResponse)
def seqcm(req: SeqcmRequest):
    return _respond(reports.run_seqcm, req.facets, req.file_text, req.field,
                    req.tsv)


@app.post("/sr", response_model=CommandResponse)
def sr(req: SrRequest):
    return _respond(reports.run_sr, req.facets, req.vertices, req.field,
                    req.dual, req.tsv)


@app.post("/fixture", response_model=CommandResponse)
def fixture(req: FixtureRequest):
    return _respond(reports.run_fixture, req.name, req.tsv)
