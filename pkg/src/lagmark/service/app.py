"""HTTP front end exposing computation, bounds, sweeps, and asymptotics."""

import math

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..bessel_asymptotics import cor14_report, estimate_c_numeric, first_positive_zero
from ..bounds_catalog import bounds_report
from ..matrix_builder import build_a
from ..spectral import ConvergenceError, mu_max_power
from ..verify_harness import (
    DEFAULT_ALPHA_VALUES,
    GridSpec,
    SweepReport,
    run_suite,
    verify_cor13,
    verify_integral_lemma,
)
from .schemas import (
    AsymptoticRequest,
    AsymptoticResponse,
    BoundEntryModel,
    BoundsRequest,
    BoundsResponse,
    ComputeRequest,
    ComputeResponse,
    SweepCaseModel,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="lagmark service", version=__version__)


def _numerical_failure(exc: Exception) -> HTTPException:
    return HTTPException(status_code=500, detail={"error": "numerical_failure", "message": str(exc)})


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/compute", response_model=ComputeResponse)
def compute(request: ComputeRequest):
    try:
        result = mu_max_power(build_a(request.n, request.alpha), tol=request.tol)
    except ConvergenceError as exc:
        raise _numerical_failure(exc)
    return ComputeResponse(
        n=request.n,
        alpha=request.alpha,
        c=math.sqrt(result.mu_max),
        c_squared=result.mu_max,
        residual=result.residual,
        iterations=result.iterations,
    )


@app.post("/bounds", response_model=BoundsResponse)
def bounds(request: BoundsRequest):
    try:
        report = bounds_report(request.n, request.alpha, include_computed=request.include_computed, tol=request.tol)
    except (ConvergenceError, RuntimeError) as exc:
        raise _numerical_failure(exc)
    entries = [
        BoundEntryModel(id=bid.value, value=entry.value, applicable=entry.applicable, hypothesis=entry.hypothesis)
        for bid, entry in report.values.items()
    ]
    return BoundsResponse(n=request.n, alpha=request.alpha, computed_c_squared=report.computed_c_sq, bounds=entries)


def _dispatch_verify(request: VerifyRequest) -> SweepReport:
    if request.suite == "cor13":
        kwargs = {}
        if request.n_min is not None or request.n_max is not None:
            kwargs["n_values"] = tuple(range(request.n_min or 1, (request.n_max or 10) + 1))
        if request.eps_list is not None:
            kwargs["eps_list"] = tuple(request.eps_list)
        if request.alpha_big is not None:
            kwargs["alpha_big"] = tuple(request.alpha_big)
        return verify_cor13(**kwargs)
    if request.suite == "integral_lemma":
        return verify_integral_lemma(trials=request.trials, seed=request.seed)
    grid = GridSpec(
        n_values=tuple(range(request.n_min or 3, (request.n_max or 30) + 1)),
        alpha_values=tuple(request.alpha_values) if request.alpha_values else DEFAULT_ALPHA_VALUES,
        suite=request.suite,
    )
    return run_suite(request.suite, grid)


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest):
    try:
        report = _dispatch_verify(request)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except (ConvergenceError, RuntimeError) as exc:
        raise _numerical_failure(exc)
    return VerifyResponse(
        suite=report.suite,
        all_pass=report.all_pass,
        worst_margin=report.worst_margin if report.cases else None,
        skipped=report.skipped,
        cases=[
            SweepCaseModel(n=c.n, alpha=c.alpha, margin=c.margin, passed=c.passed, detail=c.detail)
            for c in report.cases
        ],
    )


@app.post("/asymptotic", response_model=AsymptoticResponse)
def asymptotic(request: AsymptoticRequest):
    n_list = sorted({request.n_max // 4, request.n_max // 2, request.n_max})
    try:
        zero = first_positive_zero((request.alpha - 1.0) / 2.0)
        limits = cor14_report(request.alpha)
        extrapolated = estimate_c_numeric(request.alpha, n_list, tol=request.tol)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except (ConvergenceError, RuntimeError) as exc:
        raise _numerical_failure(exc)
    c_asymptotic = 1.0 / zero.value
    return AsymptoticResponse(
        alpha=request.alpha,
        nu=zero.nu,
        j_zero=zero.value,
        j_zero_residual=zero.residual,
        c_asymptotic=c_asymptotic,
        c_squared_lower=limits.lower,
        c_squared_upper=limits.upper,
        bound_ratio=limits.ratio,
        extrapolated=extrapolated,
        relative_difference=abs(extrapolated - c_asymptotic) / c_asymptotic,
        n_list=list(n_list),
    )
