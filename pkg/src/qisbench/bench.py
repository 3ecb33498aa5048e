"""Experiment records, scaling sweeps, and power-law exponent fitting."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

SCHEMA_VERSION = 1

CSV_COLUMNS = [
    "schema_version",
    "command",
    "source",
    "n",
    "m",
    "seed",
    "model",
    "params",
    "result_size",
    "result",
    "matrix_queries",
    "list_queries",
    "degree_queries",
    "charged_cost",
    "trials",
    "wall_time_s",
]


@dataclass
class RunReport:
    """One experiment row; serializes to a JSON object or a CSV row.

    Re-running with identical inputs and seed reproduces every field except
    wall_time_s.
    """

    command: str
    source: str
    n: int
    m: int
    seed: Optional[int]
    model: Optional[str]
    params: dict = field(default_factory=dict)
    result_size: Optional[int] = None
    result: Optional[list[int]] = None
    matrix_queries: int = 0
    list_queries: int = 0
    degree_queries: int = 0
    charged_cost: float = 0.0
    trials: Optional[int] = None
    wall_time_s: float = 0.0
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "source": self.source,
            "n": self.n,
            "m": self.m,
            "seed": self.seed,
            "model": self.model,
            "params": self.params,
            "result_size": self.result_size,
            "result": self.result,
            "matrix_queries": self.matrix_queries,
            "list_queries": self.list_queries,
            "degree_queries": self.degree_queries,
            "charged_cost": self.charged_cost,
            "trials": self.trials,
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv_values(self) -> list:
        row = self.to_dict()
        row["params"] = json.dumps(self.params, sort_keys=True)
        row["result"] = " ".join(map(str, self.result)) if self.result is not None else ""
        return [row[col] for col in CSV_COLUMNS]


def reports_to_csv(reports: Iterable[RunReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        writer.writerow(report.to_csv_values())
    return buf.getvalue()


def fit_exponent(points: Sequence[tuple[float, float]]) -> tuple[float, float, float]:
    """Least-squares fit of log(cost) against log(n).

    Returns (exponent, intercept, max absolute log residual).
    """
    if len(points) < 3:
        raise ValueError("need at least 3 points to fit an exponent")
    if any(n <= 0 or cost <= 0 for n, cost in points):
        raise ValueError("all points must be positive")
    xs = np.log([n for n, _ in points])
    ys = np.log([cost for _, cost in points])
    slope, intercept = np.polyfit(xs, ys, 1)
    residual = float(np.max(np.abs(ys - (slope * xs + intercept))))
    return float(slope), float(intercept), residual


def derive_seed(base: int, *indices: int) -> int:
    """Deterministic per-repetition seed stream."""
    out = base & 0xFFFFFFFFFFFFFFFF
    for idx in indices:
        out = (out * 1_000_003 + idx + 1) & 0xFFFFFFFFFFFFFFFF
    return out


def mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)
