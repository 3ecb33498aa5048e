"""Shared command handlers: one function per subcommand/endpoint.

The CLI and the HTTP service are both thin clients of these functions, so a
command line run and a service call with the same inputs produce identical
reports (wall time aside).
"""

from __future__ import annotations

import random
import time
from typing import Optional

from .adversary import build_gadget, flip_relation_counts, verify_gadget_flips
from .algorithms import (
    greedy_coloring,
    k_independent_set,
    kis_cost_formula,
    maximal_is,
    maximum_is,
)
from .bench import RunReport, derive_seed, fit_exponent, mean
from .graphs import (
    Graph,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_random,
    load_dimacs,
)
from .grover import CostModelConfig
from .oct_solver import min_oct
from .querying import GraphOracle, OracleMode
from .verify import verify_suite


class UsageError(ValueError):
    """Bad user-supplied arguments (exit code 2 territory)."""


def parse_gen_spec(spec: str) -> Graph:
    """Generator mini-language: random:<n>:<p>:<seed>, path:<n>, cycle:<n>,
    complete:<n>, gadgetA:<n>, gadgetB:<n>, petersen."""
    fields = spec.split(":")
    name = fields[0]
    try:
        if name == "random":
            if len(fields) not in (3, 4):
                raise UsageError("random takes random:<n>:<p>[:<seed>]")
            n, p = int(fields[1]), float(fields[2])
            seed = int(fields[3]) if len(fields) == 4 else 0
            return gen_random(n, p, seed)
        if name == "path" and len(fields) == 2:
            return gen_path(int(fields[1]))
        if name == "cycle" and len(fields) == 2:
            return gen_cycle(int(fields[1]))
        if name == "complete" and len(fields) == 2:
            return gen_complete(int(fields[1]))
        if name == "gadgetA" and len(fields) == 2:
            return build_gadget("A", int(fields[1])).graph
        if name == "gadgetB" and len(fields) == 2:
            return build_gadget("B", int(fields[1])).graph
        if name == "petersen" and len(fields) == 1:
            return gen_petersen()
    except (ValueError, TypeError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown generator spec {spec!r}")


def load_graph(
    gen: Optional[str] = None,
    dimacs: Optional[str] = None,
) -> tuple[Graph, str]:
    """Resolve the instance source; returns (graph, source descriptor)."""
    if (gen is None) == (dimacs is None):
        raise UsageError("provide exactly one of a generator spec or DIMACS text")
    if gen is not None:
        return parse_gen_spec(gen), gen
    return load_dimacs(dimacs), "dimacs"


def make_config(
    fail_prob: float = 0.0, budget_scale: float = 1.0
) -> CostModelConfig:
    return CostModelConfig(
        failure_probability=fail_prob, amplify_constant=budget_scale
    )


def _base_report(command: str, source: str, g: Graph, seed: Optional[int], model: Optional[str], params: dict) -> RunReport:
    return RunReport(
        command=command,
        source=source,
        n=g.n,
        m=g.m,
        seed=seed,
        model=model,
        params=params,
    )


def run_maximal_is(
    gen: Optional[str] = None,
    dimacs: Optional[str] = None,
    model: str = "matrix",
    seed: int = 0,
    fail_prob: float = 0.0,
) -> RunReport:
    g, source = load_graph(gen, dimacs)
    cfg = make_config(fail_prob)
    oracle = GraphOracle(g, OracleMode(model))
    started = time.perf_counter()
    result = maximal_is(oracle, cfg, random.Random(seed))
    report = _base_report(
        "maximal-is", source, g, seed, model, {"fail_prob": fail_prob}
    )
    report.result = sorted(result.vertices)
    report.result_size = len(result.vertices)
    report.matrix_queries = result.ledger.matrix_queries
    report.list_queries = result.ledger.list_queries
    report.degree_queries = result.ledger.degree_queries
    report.charged_cost = result.ledger.charged_cost
    report.wall_time_s = time.perf_counter() - started
    return report


def run_maximum_is(
    gen: Optional[str] = None,
    dimacs: Optional[str] = None,
    seed: int = 0,
    budget_scale: float = 1.0,
) -> RunReport:
    g, source = load_graph(gen, dimacs)
    cfg = make_config(budget_scale=budget_scale)
    started = time.perf_counter()
    result = maximum_is(g, cfg, random.Random(seed))
    report = _base_report(
        "maximum-is", source, g, seed, None, {"budget_scale": budget_scale}
    )
    report.result = sorted(result.vertices)
    report.result_size = len(result.vertices)
    report.charged_cost = result.charged_cost
    report.trials = result.trials
    report.wall_time_s = time.perf_counter() - started
    return report


def run_k_is(
    k: int,
    gen: Optional[str] = None,
    dimacs: Optional[str] = None,
) -> RunReport:
    g, source = load_graph(gen, dimacs)
    started = time.perf_counter()
    found = k_independent_set(g, k)
    exponent, value = kis_cost_formula(g.n, k)
    report = _base_report(
        "k-is",
        source,
        g,
        None,
        None,
        {"k": k, "cost_exponent": str(exponent), "cost_value": value},
    )
    report.result = sorted(found) if found is not None else None
    report.result_size = len(found) if found is not None else None
    report.charged_cost = value
    report.wall_time_s = time.perf_counter() - started
    return report


def run_oct(
    gen: Optional[str] = None,
    dimacs: Optional[str] = None,
    inner: str = "exact",
    seed: int = 0,
) -> RunReport:
    g, source = load_graph(gen, dimacs)
    started = time.perf_counter()
    result = min_oct(g, inner=inner, rng=random.Random(seed))
    report = _base_report(
        "oct",
        source,
        g,
        seed,
        None,
        {
            "inner": inner,
            "candidates": result.candidates_examined,
            "split_by_component": result.split_by_component,
        },
    )
    report.result = sorted(result.transversal)
    report.result_size = len(result.transversal)
    report.charged_cost = result.charged_cost
    report.wall_time_s = time.perf_counter() - started
    return report


def run_color(
    gen: Optional[str] = None,
    dimacs: Optional[str] = None,
    model: str = "matrix",
    seed: int = 0,
    fail_prob: float = 0.0,
) -> RunReport:
    g, source = load_graph(gen, dimacs)
    cfg = make_config(fail_prob)
    oracle = GraphOracle(g, OracleMode(model))
    started = time.perf_counter()
    coloring = greedy_coloring(oracle, cfg, random.Random(seed))
    report = _base_report(
        "color",
        source,
        g,
        seed,
        model,
        {
            "fail_prob": fail_prob,
            "colors": {str(v): c for v, c in sorted(coloring.assignment.items())},
        },
    )
    report.result_size = coloring.num_colors
    report.matrix_queries = oracle.ledger.matrix_queries
    report.list_queries = oracle.ledger.list_queries
    report.degree_queries = oracle.ledger.degree_queries
    report.charged_cost = oracle.ledger.charged_cost
    report.wall_time_s = time.perf_counter() - started
    return report


def run_adversary(n: int) -> dict:
    """Gadget construction summary plus the exhaustive flip verification."""
    m, m_prime, bound = flip_relation_counts(n)
    report = verify_gadget_flips(n)
    a = build_gadget("A", n)
    b = build_gadget("B", n)
    return {
        "command": "adversary",
        "n": n,
        "m": m,
        "m_prime": m_prime,
        "bound": bound,
        "vertices": a.graph.n,
        "a_edges": a.graph.m,
        "b_edges": b.graph.m,
        "passed": report["passed"],
        "failures": report["failures"],
    }


BENCH_ALGORITHMS = ("maximal-is",)


def run_bench(
    algorithm: str,
    sizes: list[int],
    density: float = 0.5,
    reps: int = 20,
    model: str = "matrix",
    seed: int = 0,
) -> dict:
    """Scaling sweep: one report per (size, rep), plus a log-log exponent fit
    of the mean charged cost."""
    if algorithm not in BENCH_ALGORITHMS:
        raise UsageError(f"bench supports {BENCH_ALGORITHMS}, got {algorithm!r}")
    if reps < 1:
        raise UsageError("reps must be >= 1")
    reports: list[RunReport] = []
    means: list[tuple[float, float]] = []
    for size in sizes:
        costs = []
        for rep in range(reps):
            instance_seed = derive_seed(seed, size, rep)
            spec = f"random:{size}:{density}:{instance_seed}"
            report = run_maximal_is(gen=spec, model=model, seed=instance_seed)
            report.command = f"bench {algorithm}"
            report.params.update({"size": size, "rep": rep, "density": density})
            reports.append(report)
            costs.append(report.charged_cost)
        means.append((size, mean(costs)))
    fit = None
    if len(means) >= 3 and all(cost > 0 for _, cost in means):
        exponent, intercept, residual = fit_exponent(means)
        fit = {"exponent": exponent, "intercept": intercept, "max_residual": residual}
    return {
        "command": f"bench {algorithm}",
        "model": model,
        "sizes": sizes,
        "density": density,
        "reps": reps,
        "seed": seed,
        "mean_costs": [{"n": n, "cost": cost} for n, cost in means],
        "fit": fit,
        "reports": reports,
    }


def run_verify(scopes: Optional[list[str]] = None, nmax: Optional[int] = None, Nmax: Optional[int] = None) -> dict:
    overrides: dict = {}
    if nmax is not None:
        overrides["gadgets"] = {"nmax": min(nmax, 3)}
        overrides["oct"] = {"nmax": min(nmax, 8)}
        overrides["success_prob"] = {"nmax": min(nmax, 8)}
        overrides["graph"] = {"nmax": min(nmax, 6)}
        overrides["eppstein"] = {"nmax": max(nmax, 2)}
    if Nmax is not None:
        overrides["grover"] = {"n_max": Nmax}
    result = verify_suite(scopes, **overrides)
    result["command"] = "verify"
    return result
