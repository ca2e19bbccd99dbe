"""HTTP service exposing the certification pipeline.

One POST endpoint per pipeline stage, JSON in and out, same documents
as the file formats.  The service is stateless; run it with
`uvicorn kaluza.service:app`.  Domain errors (bad tables, guard
overruns, points outside the evaluation ball) come back as 400 with a
detail message; schema errors are FastAPI's usual 422.
"""

from __future__ import annotations

from typing import Any, Literal, Optional, Union

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .checks import (
    c_from_b,
    c_from_r,
    check_kaluza_1d,
    check_theorem1,
    check_theorem2,
    check_word_condition,
)
from .kernels import certify
from .moments import AtomicMeasureD, atomic_coeffs, product_measure_coeffs
from .serialize import (
    cert_report_to_doc,
    check_report_to_doc,
    measure_from_doc,
    norms_table_from_doc,
    parse_fraction,
    sequence_from_doc,
    table_from_doc,
    table_to_doc,
)
from .series import (
    DEFAULT_GUARD,
    evaluate,
    geometric_table,
    multinomial_table,
    solve_renewal,
)
from .symmetrize import solve_via_words

FracValue = Union[str, int]


class EntryIn(BaseModel):
    idx: list[int]
    val: FracValue


class TableIn(BaseModel):
    kind: Literal["multiindex", "word"]
    dim: int
    max_degree: int
    entries: list[EntryIn]
    default: Optional[FracValue] = None


class NormsIn(BaseModel):
    kind: Literal["squared_norms", "coeffs", "multiindex"]
    dim: int
    max_degree: int
    entries: list[EntryIn]
    default: Optional[FracValue] = None


class EntryOut(BaseModel):
    idx: list[int]
    val: str


class TableOut(BaseModel):
    kind: str
    dim: int
    max_degree: int
    entries: list[EntryOut]


class ViolationOut(BaseModel):
    cond: str
    at: list[list[int]]
    lhs: str
    rhs: str


class CheckReportOut(BaseModel):
    passed: bool
    checked_degree: int
    violations: list[ViolationOut]


class PointedValueOut(BaseModel):
    idx: list[int]
    val: str


class CertReportOut(BaseModel):
    verdict: str
    checked_degree: int
    thm1: CheckReportOut
    thm2: CheckReportOut
    q_min: Optional[PointedValueOut]
    witness: Optional[PointedValueOut]
    dbr_b: Optional[TableOut]


class SolveRequest(BaseModel):
    table: TableIn
    degree: Optional[int] = None


class CheckRequest(BaseModel):
    thm: Literal["1", "2", "1d", "word"]
    table: Optional[TableIn] = None
    sequence: Optional[list[FracValue]] = None


class CertifyRequest(BaseModel):
    table: Optional[TableIn] = None
    norms: Optional[NormsIn] = None


class GenRequest(BaseModel):
    family: Literal[
        "multinomial",
        "geometric",
        "from-r",
        "from-b",
        "product-measure",
        "atomic-measure",
    ]
    degree: Optional[int] = None
    dim: Optional[int] = None
    params: Optional[dict[str, Any]] = None


class EvalRequest(BaseModel):
    table: TableIn
    point: list[Union[str, float]]


class OracleRequest(BaseModel):
    table: TableIn
    guard: Optional[int] = None


class EvalResponse(BaseModel):
    re: float
    im: float


class OracleResponse(BaseModel):
    equal: bool


class HealthResponse(BaseModel):
    status: str
    version: str


app = FastAPI(title="kaluza", version=__version__)


@app.exception_handler(ValueError)
async def _domain_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _load_table(doc: TableIn):
    return table_from_doc(doc.model_dump(exclude_none=True))


@app.get("/health", response_model=HealthResponse)
async def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/solve", response_model=TableOut)
async def solve(req: SolveRequest) -> dict:
    c = _load_table(req.table)
    if req.degree is not None:
        c = c.truncate(req.degree)
    return table_to_doc(solve_renewal(c))


@app.post("/check", response_model=CheckReportOut)
async def check(req: CheckRequest) -> dict:
    if req.thm == "1d":
        if req.sequence is not None:
            seq = [parse_fraction(x) for x in req.sequence]
        elif req.table is not None:
            seq = sequence_from_doc(req.table.model_dump(exclude_none=True))
        else:
            raise ValueError('scalar check needs "sequence" or a dim-1 table')
        return check_report_to_doc(check_kaluza_1d(seq))
    if req.table is None:
        raise ValueError('check needs a "table"')
    c = _load_table(req.table)
    if req.thm == "1":
        return check_report_to_doc(check_theorem1(c))
    if req.thm == "2":
        return check_report_to_doc(check_theorem2(c))
    return check_report_to_doc(check_word_condition(c))


@app.post("/certify", response_model=CertReportOut)
async def certify_endpoint(req: CertifyRequest) -> dict:
    if (req.table is None) == (req.norms is None):
        raise ValueError('certify needs exactly one of "table" or "norms"')
    if req.table is not None:
        c = _load_table(req.table)
    else:
        c = norms_table_from_doc(req.norms.model_dump(exclude_none=True))
    return cert_report_to_doc(certify(c))


def _require(value, name: str):
    if value is None:
        raise ValueError(f'gen needs "{name}" for this family')
    return value


@app.post("/gen", response_model=TableOut)
async def gen(req: GenRequest) -> dict:
    params = req.params or {}
    if req.family == "multinomial":
        table = multinomial_table(_require(req.dim, "dim"), _require(req.degree, "degree"))
    elif req.family == "geometric":
        ratios = _require(params.get("ratios"), "params.ratios")
        if req.dim is not None and req.dim != len(ratios):
            raise ValueError(f"dim {req.dim} does not match {len(ratios)} ratios")
        table = geometric_table(
            [parse_fraction(x) for x in ratios], _require(req.degree, "degree")
        )
    elif req.family in ("from-r", "from-b"):
        source = table_from_doc(params) if params else None
        if source is None:
            raise ValueError("gen needs a table document in params")
        if req.dim is not None and req.dim != source.index_set.dim:
            raise ValueError(f"dim {req.dim} does not match the params table")
        if req.degree is not None and req.degree != source.max_degree:
            raise ValueError(f"degree {req.degree} does not match the params table")
        table = c_from_r(source) if req.family == "from-r" else c_from_b(source)
    else:
        measure = measure_from_doc(_require(params or None, "params"))
        degree = _require(req.degree, "degree")
        if isinstance(measure, AtomicMeasureD):
            if req.family != "atomic-measure":
                raise ValueError("product-measure params must carry axes")
            table = atomic_coeffs(measure, degree)
        else:
            if req.family != "product-measure":
                raise ValueError("atomic-measure params must carry atomsD")
            if req.dim is not None and req.dim != len(measure):
                raise ValueError(f"dim {req.dim} does not match {len(measure)} axes")
            table = product_measure_coeffs(measure, degree)
    return table_to_doc(table)


@app.post("/eval", response_model=EvalResponse)
async def eval_endpoint(req: EvalRequest) -> dict:
    c = _load_table(req.table)
    try:
        point = [complex(str(p).strip()) for p in req.point]
    except ValueError:
        raise ValueError(f"cannot parse evaluation point {req.point!r}") from None
    value = evaluate(c, point)
    return {"re": value.real, "im": value.imag}


@app.post("/oracle", response_model=OracleResponse)
async def oracle(req: OracleRequest) -> dict:
    c = _load_table(req.table)
    guard = req.guard if req.guard is not None else DEFAULT_GUARD
    direct = solve_renewal(c)
    via_words = solve_via_words(c, guard=guard)
    return {"equal": direct == via_words}
