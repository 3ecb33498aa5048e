"""FastAPI service exposing every algorithm runner as a POST endpoint."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import runners
from ..brute import BudgetExceededError
from ..graphs import DimacsError
from .models import (
    AdversaryRequest,
    AdversaryResponse,
    BenchRequest,
    BenchResponse,
    ColorRequest,
    KISRequest,
    MaximalISRequest,
    MaximumISRequest,
    OctRequest,
    RunReportModel,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="qisbench",
        description="Quantum-query cost models for independent set problems",
    )

    def guard(fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (runners.UsageError, DimacsError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except BudgetExceededError as exc:
            raise HTTPException(status_code=413, detail=str(exc)) from exc

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/maximal-is", response_model=RunReportModel)
    def maximal_is(req: MaximalISRequest):
        report = guard(
            runners.run_maximal_is,
            gen=req.gen,
            dimacs=req.dimacs,
            model=req.model,
            seed=req.seed,
            fail_prob=req.fail_prob,
        )
        return report.to_dict()

    @app.post("/maximum-is", response_model=RunReportModel)
    def maximum_is(req: MaximumISRequest):
        report = guard(
            runners.run_maximum_is,
            gen=req.gen,
            dimacs=req.dimacs,
            seed=req.seed,
            budget_scale=req.budget_scale,
        )
        return report.to_dict()

    @app.post("/k-is", response_model=RunReportModel)
    def k_is(req: KISRequest):
        report = guard(runners.run_k_is, k=req.k, gen=req.gen, dimacs=req.dimacs)
        return report.to_dict()

    @app.post("/oct", response_model=RunReportModel)
    def oct_endpoint(req: OctRequest):
        report = guard(
            runners.run_oct, gen=req.gen, dimacs=req.dimacs, inner=req.inner, seed=req.seed
        )
        return report.to_dict()

    @app.post("/color", response_model=RunReportModel)
    def color(req: ColorRequest):
        report = guard(
            runners.run_color,
            gen=req.gen,
            dimacs=req.dimacs,
            model=req.model,
            seed=req.seed,
            fail_prob=req.fail_prob,
        )
        return report.to_dict()

    @app.post("/adversary", response_model=AdversaryResponse)
    def adversary(req: AdversaryRequest):
        return guard(runners.run_adversary, n=req.n)

    @app.post("/bench", response_model=BenchResponse)
    def bench(req: BenchRequest):
        result = guard(
            runners.run_bench,
            algorithm=req.algorithm,
            sizes=req.sizes,
            density=req.density,
            reps=req.reps,
            model=req.model,
            seed=req.seed,
        )
        result["reports"] = [r.to_dict() for r in result["reports"]]
        return result

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest):
        return guard(runners.run_verify, scopes=req.scopes, nmax=req.nmax, Nmax=req.Nmax)

    return app


app = create_app()
