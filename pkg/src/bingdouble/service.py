"""HTTP facade over the computation modules.

Each endpoint wraps exactly one library operation. Domain errors
(out-of-range arguments, odd half powers, failed exact divisions)
surface as 422 responses carrying {error, message}; they are the same
exceptions the library raises, so the service adds no semantics of its
own. The worker cap for table generation and verification comes from
the BINGDOUBLE_WORKERS environment variable.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .bing import alpha, d_table, x_coeff
from .habiro import eval_at_root, lambda_series, mijk_partial, ohtsuki_c, omega, s_sum
from .laurent import LaurentV
from .milnor import borromean_reduced, milnor_reduced
from .qnum import sym_factorization
from .schemas import (
    AlphaRequest,
    BorromeanRequest,
    DlTableOut,
    DlTableRequest,
    EvalRootRequest,
    FactoredForm,
    LambdaRequest,
    MijkRequest,
    MilnorRequest,
    OmegaRequest,
    PolynomialOut,
    ResidueOut,
    SeriesOut,
    SeriesRequest,
    SSumRequest,
    VerifyOut,
    VerifyRequest,
    XCoeffRequest,
)
from .verify import run_suite

app = FastAPI(title="bingdouble", version=__version__)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("BINGDOUBLE_WORKERS", "1")))
    except ValueError:
        return 1


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"error": type(exc).__name__, "message": str(exc)},
    )


@app.exception_handler(ArithmeticError)
async def _arithmetic_error(request: Request, exc: ArithmeticError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"error": type(exc).__name__, "message": str(exc)},
    )


def _poly_out(value: LaurentV, factor_limit: int | None = None) -> PolynomialOut:
    factored = None
    if factor_limit is not None:
        residual, factors = sym_factorization(value, factor_limit)
        factored = FactoredForm(
            limit=factor_limit,
            factors=factors,
            residual=residual.to_json(),
            residual_pretty=residual.pretty(),
        )
    return PolynomialOut(
        terms=value.to_json(),
        pretty_v=value.pretty("v"),
        pretty_q=value.pretty("q") if value.has_even_support() else None,
        factored=factored,
    )


@app.post("/alpha", response_model=PolynomialOut)
def post_alpha(req: AlphaRequest) -> PolynomialOut:
    return _poly_out(alpha(req.m, req.n), req.factor_limit)


@app.post("/xcoeff", response_model=PolynomialOut)
def post_xcoeff(req: XCoeffRequest) -> PolynomialOut:
    return _poly_out(x_coeff(req.i, req.j, req.l), req.factor_limit)


@app.post("/dltable", response_model=DlTableOut)
def post_dltable(req: DlTableRequest) -> DlTableOut:
    table = d_table(req.l, req.m_max, req.n_max, workers=_workers())
    return DlTableOut(**table.to_json(), csv=table.to_csv())


@app.post("/milnor", response_model=PolynomialOut)
def post_milnor(req: MilnorRequest) -> PolynomialOut:
    return _poly_out(milnor_reduced(req.colors), req.factor_limit)


@app.post("/borromean", response_model=PolynomialOut)
def post_borromean(req: BorromeanRequest) -> PolynomialOut:
    return _poly_out(borromean_reduced(req.i, req.j, req.k), req.factor_limit)


@app.post("/ssum", response_model=PolynomialOut)
def post_ssum(req: SSumRequest) -> PolynomialOut:
    return _poly_out(s_sum(req.l, req.eps, req.eps2), req.factor_limit)


@app.post("/omega", response_model=PolynomialOut)
def post_omega(req: OmegaRequest) -> PolynomialOut:
    return _poly_out(omega(req.p, req.n))


@app.post("/mijk", response_model=PolynomialOut)
def post_mijk(req: MijkRequest) -> PolynomialOut:
    return _poly_out(mijk_partial((req.i, req.j, req.k), req.level))


@app.post("/ohtsuki-c", response_model=SeriesOut)
def post_ohtsuki_c(req: SeriesRequest) -> SeriesOut:
    series = ohtsuki_c(req.order)
    return SeriesOut(order=series.order, coeffs=series.to_strings())


@app.post("/lambda", response_model=SeriesOut)
def post_lambda(req: LambdaRequest) -> SeriesOut:
    series = lambda_series((req.i, req.j, req.k), req.order)
    return SeriesOut(order=series.order, coeffs=series.to_strings())


@app.post("/evalroot", response_model=ResidueOut)
def post_evalroot(req: EvalRootRequest) -> ResidueOut:
    residue = eval_at_root(LaurentV.from_json(req.terms), req.m)
    return ResidueOut(m=residue.m, coeffs=[str(c) for c in residue.coeffs])


@app.post("/verify", response_model=VerifyOut)
def post_verify(req: VerifyRequest) -> VerifyOut:
    result = run_suite(level=req.level, workers=_workers(), names=req.checks)
    return VerifyOut(level=result["level"], passed=result["pass"],
                     reports=result["reports"])
