"""Pydantic request/response models for the HTTP service.

The CLI serializes its arguments into these same models, so service and
command line accept identical payloads.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, model_validator


class GraphSource(BaseModel):
    """Exactly one of a generator spec or DIMACS edge-format text."""

    gen: Optional[str] = None
    dimacs: Optional[str] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "GraphSource":
        if (self.gen is None) == (self.dimacs is None):
            raise ValueError("provide exactly one of 'gen' or 'dimacs'")
        return self


class MaximalISRequest(GraphSource):
    model: str = "matrix"
    seed: int = 0
    fail_prob: float = Field(default=0.0, ge=0.0, lt=1.0)


class MaximumISRequest(GraphSource):
    seed: int = 0
    budget_scale: float = Field(default=1.0, gt=0.0)


class KISRequest(GraphSource):
    k: int = Field(ge=1)


class OctRequest(GraphSource):
    inner: str = "exact"
    seed: int = 0


class ColorRequest(GraphSource):
    model: str = "matrix"
    seed: int = 0
    fail_prob: float = Field(default=0.0, ge=0.0, lt=1.0)


class AdversaryRequest(BaseModel):
    n: int = Field(ge=1)


class BenchRequest(BaseModel):
    algorithm: str = "maximal-is"
    sizes: list[int]
    density: float = Field(default=0.5, ge=0.0, le=1.0)
    reps: int = Field(default=20, ge=1)
    model: str = "matrix"
    seed: int = 0


class VerifyRequest(BaseModel):
    scopes: Optional[list[str]] = None
    nmax: Optional[int] = None
    Nmax: Optional[int] = None


class RunReportModel(BaseModel):
    schema_version: int
    command: str
    source: str
    n: int
    m: int
    seed: Optional[int] = None
    model: Optional[str] = None
    params: dict = {}
    result_size: Optional[int] = None
    result: Optional[list[int]] = None
    matrix_queries: int = 0
    list_queries: int = 0
    degree_queries: int = 0
    charged_cost: float = 0.0
    trials: Optional[int] = None
    wall_time_s: float = 0.0


class AdversaryResponse(BaseModel):
    command: str
    n: int
    m: int
    m_prime: int
    bound: float
    vertices: int
    a_edges: int
    b_edges: int
    passed: bool
    failures: list[str]


class BenchResponse(BaseModel):
    command: str
    model: str
    sizes: list[int]
    density: float
    reps: int
    seed: int
    mean_costs: list[dict]
    fit: Optional[dict] = None
    reports: list[RunReportModel]


class VerifyResponse(BaseModel):
    command: str
    passed: bool
    results: list[dict]
