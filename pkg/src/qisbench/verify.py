"""Cross-checks of every desk-scale claim against independent oracles.

Each scope returns a summary dict with counterexamples when found; failures
are report content, never exceptions.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Optional

import numpy as np

from . import catalogue
from .adversary import verify_gadget_flips
from .algorithms import exact_success_prob, max_is_trial, trial_step, _deg2_mis_mask
from .brute import brute_alpha, brute_oct, is_maximal_is
from .graphs import (
    Graph,
    adjacency_masks,
    complement,
    gen_random,
    is_bipartite,
    is_connected,
)
from .grover import model_iterations, sv_success_curve
from .oct_solver import enumerate_maximal_is, eppstein_bound_ceil, min_oct


def closed_form_success(N: int, k: int, t: int) -> float:
    """The analytic Grover success probability sin^2((2t+1) asin(sqrt(k/N)))."""
    theta = math.asin(math.sqrt(k / N))
    return math.sin((2 * t + 1) * theta) ** 2


def first_peak(curve: list[float], tol: float = 1e-12) -> int:
    """Smallest t whose success probability is not exceeded by t+1 (the
    optimal stopping iteration; later near-periodic peaks are ignored).
    The tolerance absorbs float noise on flat curves."""
    for t in range(len(curve) - 1):
        if curve[t] >= curve[t + 1] - tol:
            return t
    return len(curve) - 1


def monte_carlo_trial_success(g: Graph, trials: int, seed: int) -> float:
    """Fraction of independent randomized trials that reach alpha(g).

    Trials are aggregated per reachable (surviving-set, chosen-size) state
    and coin flips applied as binomial splits, which is distributionally
    identical to running the trials one by one.
    """
    target, _ = brute_alpha(g)
    masks = adjacency_masks(g)
    rng = np.random.default_rng(seed)
    states: dict[tuple[int, int], int] = {((1 << g.n) - 1, 0): trials}
    successes = 0
    transitions: dict[int, Optional[tuple[int, int, int]]] = {}
    while states:
        next_states: dict[tuple[int, int], int] = {}
        for (mask, size), count in states.items():
            step = transitions.get(mask, False)
            if step is False:
                step = trial_step(masks, mask)
                transitions[mask] = step
            if step is None:
                final = size + _deg2_mis_mask(masks, mask).bit_count()
                if final == target:
                    successes += count
                continue
            v, mask_drop, mask_take = step
            take = int(rng.binomial(count, 0.5))
            if take:
                key = (mask_take, size + 1)
                next_states[key] = next_states.get(key, 0) + take
            if count - take:
                key = (mask_drop, size)
                next_states[key] = next_states.get(key, 0) + (count - take)
        states = next_states
    return successes / trials


def _summary(scope: str, checks: int, failures: list, extra: Optional[dict] = None) -> dict:
    out = {"scope": scope, "checks": checks, "failures": failures, "passed": not failures}
    if extra:
        out.update(extra)
    return out


def verify_graph_core(nmax: int = 6, samples: int = 50, seed: int = 0) -> dict:
    """View agreement, complement involution, and bipartite-vs-odd-cycle
    agreement on exhaustive tiny graphs plus random spot checks."""
    failures: list[str] = []
    checks = 0
    for n in range(1, nmax + 1):
        for g in catalogue.all_graphs(n):
            checks += 1
            for u in g.vertices():
                for v in g.vertices():
                    in_list = v in g.neighbors(u)
                    if g.has_edge(u, v) != in_list:
                        failures.append(f"view disagreement at ({u},{v}) in {g!r}")
            if complement(complement(g)) != g:
                failures.append(f"complement not involutive on {g!r}")
            odd_cycle_free = not _has_odd_cycle(g)
            if is_bipartite(g)[0] != odd_cycle_free:
                failures.append(f"is_bipartite wrong on {g!r}")
    rng = random.Random(seed)
    for _ in range(samples):
        g = gen_random(rng.randint(2, 32), rng.random(), rng.randrange(2**32))
        checks += 1
        if sum(g.degree(v) for v in g.vertices()) != 2 * g.m:
            failures.append(f"degree sum mismatch on {g!r}")
        if complement(complement(g)) != g:
            failures.append(f"complement not involutive on {g!r}")
    return _summary("graph", checks, failures)


def _has_odd_cycle(g: Graph) -> bool:
    """Brute force: enumerate all odd-length vertex sequences and test
    whether any forms a cycle. Tiny graphs only."""
    import itertools

    for size in range(3, g.n + 1, 2):
        for cycle in itertools.permutations(range(1, g.n + 1), size):
            if cycle[0] != min(cycle):
                continue
            if all(
                g.has_edge(cycle[i], cycle[(i + 1) % size]) for i in range(size)
            ):
                return True
    return False


def verify_grover(n_pairs: int = 200, n_max: int = 1024, seed: int = 0, tol: float = 1e-9) -> dict:
    """Simulator vs closed form at every t <= 2*sqrt(N), and first-peak
    iteration vs the cost model's count (within 1)."""
    rng = random.Random(seed)
    failures: list[str] = []
    max_dev = 0.0
    for _ in range(n_pairs):
        N = rng.randint(2, n_max)
        k = rng.randint(1, N)
        t_max = math.ceil(2 * math.sqrt(N))
        curve = sv_success_curve(N, k, t_max)
        for t, simulated in enumerate(curve):
            dev = abs(simulated - closed_form_success(N, k, t))
            max_dev = max(max_dev, dev)
            if dev > tol:
                failures.append(f"N={N} k={k} t={t}: deviation {dev:.3e}")
                break
        peak = first_peak(curve)
        model = model_iterations(N, k)
        if abs(peak - model) > 1:
            failures.append(f"N={N} k={k}: first peak {peak} vs model {model}")
    return _summary("grover", n_pairs, failures, {"max_deviation": max_dev})


def verify_success_prob(
    nmax: int = 6,
    random_graphs: int = 20,
    random_nmax: int = 12,
    trials: int = 100_000,
    seed: int = 0,
) -> dict:
    """Exact trial success probability vs Monte Carlo, within 4 sigma."""
    failures: list[str] = []
    checks = 0
    min_margin = math.inf
    instances: list[Graph] = []
    for n in range(1, nmax + 1):
        instances.extend(catalogue.connected_graphs(n))
    rng = random.Random(seed)
    for _ in range(random_graphs):
        n = rng.randint(4, random_nmax)
        instances.append(gen_random(n, rng.uniform(0.1, 0.9), rng.randrange(2**32)))
    for idx, g in enumerate(instances):
        checks += 1
        exact = exact_success_prob(g)
        freq = monte_carlo_trial_success(g, trials, seed * 1_000_003 + idx)
        sigma = math.sqrt(float(exact) * (1 - float(exact)) / trials)
        if abs(freq - float(exact)) > 4 * sigma:
            failures.append(
                f"{g!r}: exact {float(exact):.6f} vs MC {freq:.6f} (sigma {sigma:.2e})"
            )
        margin = float(exact) * 2.0 ** (2 * g.n / 5)
        min_margin = min(min_margin, margin)
    return _summary(
        "success-prob", checks, failures, {"min_success_times_bound": min_margin}
    )


def verify_oct(nmax: int = 7, random_graphs: int = 100, random_nmax: int = 12, seed: int = 0) -> dict:
    """Decomposition solver vs brute-force minimum, exhaustive plus random
    connected instances."""
    failures: list[str] = []
    checks = 0
    for n in range(1, nmax + 1):
        for g in catalogue.connected_graphs(n):
            checks += 1
            got = min_oct(g)
            want, _ = brute_oct(g)
            if len(got.transversal) != want:
                failures.append(f"{g!r}: min_oct {len(got.transversal)} vs brute {want}")
    rng = random.Random(seed)
    produced = 0
    while produced < random_graphs:
        n = rng.randint(4, random_nmax)
        g = gen_random(n, rng.uniform(0.2, 0.7), rng.randrange(2**32))
        if not is_connected(g):
            continue
        produced += 1
        checks += 1
        got = min_oct(g)
        want, _ = brute_oct(g)
        if len(got.transversal) != want:
            failures.append(f"{g!r}: min_oct {len(got.transversal)} vs brute {want}")
    return _summary("oct", checks, failures)


def verify_gadgets(nmax: int = 3) -> dict:
    failures: list[str] = []
    details = []
    for n in range(1, nmax + 1):
        report = verify_gadget_flips(n)
        details.append(report)
        failures.extend(f"n={n}: {msg}" for msg in report["failures"])
    return _summary("gadgets", nmax, failures, {"details": details})


def verify_eppstein(n_graphs: int = 100, nmax: int = 16, seed: int = 0) -> dict:
    """Enumerated maximal-IS counts at every size cap against ceil(M(k)),
    plus maximality of every enumerated set."""
    rng = random.Random(seed)
    failures: list[str] = []
    checks = 0
    for _ in range(n_graphs):
        n = rng.randint(2, nmax)
        g = gen_random(n, rng.uniform(0.1, 0.9), rng.randrange(2**32))
        sets = enumerate_maximal_is(g)
        checks += 1
        if len(sets) != len(set(sets)):
            failures.append(f"{g!r}: duplicate maximal sets")
        if not all(is_maximal_is(g, s) for s in sets):
            failures.append(f"{g!r}: non-maximal set enumerated")
        sizes = sorted(len(s) for s in sets)
        for k in range(1, n + 1):
            count = sum(1 for s in sizes if s <= k)
            if count > eppstein_bound_ceil(n, k):
                failures.append(
                    f"{g!r}: {count} maximal sets of size <= {k} exceeds bound"
                )
    return _summary("eppstein", checks, failures)


SCOPES = {
    "graph": verify_graph_core,
    "grover": verify_grover,
    "success-prob": verify_success_prob,
    "oct": verify_oct,
    "gadgets": verify_gadgets,
    "eppstein": verify_eppstein,
}


def verify_suite(scopes: Optional[list[str]] = None, **overrides) -> dict:
    """Run the selected scopes (all by default) with optional per-scope
    keyword overrides, e.g. verify_suite(["oct"], oct={"nmax": 8})."""
    selected = scopes or list(SCOPES)
    results = []
    for scope in selected:
        if scope not in SCOPES:
            raise ValueError(f"unknown verification scope {scope!r}")
        kwargs = overrides.get(scope.replace("-", "_"), {})
        results.append(SCOPES[scope](**kwargs))
    return {"results": results, "passed": all(r["passed"] for r in results)}
