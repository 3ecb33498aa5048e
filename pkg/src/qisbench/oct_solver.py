"""Minimum odd cycle transversal via the independent-set decomposition.

Every candidate transversal is V minus the union of a maximal independent
set V1 and a maximum independent set V2 of the remainder; the union of two
independent sets induces a bipartite graph, and the minimum over all V1 is
optimal for connected inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algorithms import maximum_is
from .brute import DEFAULT_BUDGET, BudgetExceededError, OracleBudget, brute_alpha
from .graphs import Graph, connected_components, delete_vertices, induced_subgraph, is_bipartite
from .grover import CostModelConfig


@dataclass
class OctResult:
    transversal: frozenset[int]
    candidates_examined: int
    charged_cost: float
    split_by_component: bool = False


def enumerate_maximal_is(
    g: Graph,
    size_cap: Optional[int] = None,
    max_n: int = 30,
) -> list[frozenset[int]]:
    """All maximal independent sets (of size <= size_cap when given),
    by branching on the lowest-index undecided vertex with maximality
    filtering through an excluded set."""
    if g.n > max_n:
        raise BudgetExceededError(f"enumeration limited to n <= {max_n}")
    adj = {v: set(g.neighbors(v)) for v in g.vertices()}
    out: list[frozenset[int]] = []

    def branch(current: list[int], candidates: list[int], excluded: list[int]) -> None:
        if size_cap is not None and len(current) > size_cap:
            return
        if not candidates:
            if not excluded and (size_cap is None or len(current) <= size_cap):
                out.append(frozenset(current))
            return
        v, rest = candidates[0], candidates[1:]
        branch(
            current + [v],
            [u for u in rest if u not in adj[v]],
            [u for u in excluded if u not in adj[v]],
        )
        branch(current, rest, excluded + [v])

    branch([], list(g.vertices()), [])
    return out


def eppstein_bound(n: int, k: int) -> Union[Fraction, float]:
    """Upper bound M(k) on the number of maximal independent sets of size at
    most k: 3^(4k-n) * 4^(n-3k) for k <= floor(n/3), else 3^(n/3). The first
    branch is kept exact-rational (it is fractional when 4k < n)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if k <= n // 3:
        return Fraction(3) ** (4 * k - n) * Fraction(4) ** (n - 3 * k)
    return 3.0 ** (n / 3)


def eppstein_bound_ceil(n: int, k: int) -> int:
    """ceil(M(k)), evaluated exactly (integer cube root for the 3^(n/3)
    branch, avoiding float error)."""
    bound = eppstein_bound(n, k)
    if isinstance(bound, Fraction):
        return -(-bound.numerator // bound.denominator)
    target = 3**n
    t = round(target ** (1.0 / 3))
    while t**3 < target:
        t += 1
    while (t - 1) ** 3 >= target:
        t -= 1
    return t


def _inner_alpha_exact(
    g: Graph, budget: OracleBudget
) -> tuple[frozenset[int], float]:
    _, witness = brute_alpha(g, budget)
    return witness, 0.0


def min_oct(
    g: Graph,
    inner: str = "exact",
    cfg: Optional[CostModelConfig] = None,
    rng: Optional[random.Random] = None,
    max_n: int = 25,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> OctResult:
    """Minimum odd cycle transversal.

    inner="exact" solves each remainder's maximum IS with the brute-force
    oracle (deterministic); inner="quantum" uses the amplified randomized
    solver, so the result is a valid transversal but only probably minimum.
    Disconnected inputs are solved per component and flagged.
    """
    if g.n > max_n:
        raise BudgetExceededError(f"odd cycle transversal limited to n <= {max_n}")
    if inner not in ("exact", "quantum"):
        raise ValueError(f"unknown inner solver {inner!r}")
    cfg = cfg or CostModelConfig()
    rng = rng or random.Random(0)

    components = connected_components(g)
    if len(components) > 1:
        transversal: set[int] = set()
        candidates = 0
        cost = 0.0
        for comp in components:
            sub, labels = induced_subgraph(g, comp)
            part = min_oct(sub, inner, cfg, rng, max_n, budget)
            transversal.update(labels[v - 1] for v in part.transversal)
            candidates += part.candidates_examined
            cost += part.charged_cost
        return OctResult(frozenset(transversal), candidates, cost, split_by_component=True)

    all_vertices = frozenset(g.vertices())
    best: frozenset[int] = all_vertices
    candidates = 0
    cost = 0.0
    for v1 in enumerate_maximal_is(g):
        remainder, labels = delete_vertices(g, v1)
        if inner == "exact":
            witness, _ = _inner_alpha_exact(remainder, budget)
        else:
            result = maximum_is(remainder, cfg, rng)
            witness = result.vertices
            # Trial budget on the (n - |V1|)-vertex remainder.
        cost += 2.0 ** ((g.n - len(v1)) / 5)
        v2 = frozenset(labels[v - 1] for v in witness)
        candidate = all_vertices - v1 - v2
        candidates += 1
        leftover, _ = delete_vertices(g, candidate)
        if not is_bipartite(leftover)[0]:
            raise AssertionError(
                "independent-set decomposition produced a non-bipartite remainder"
            )
        if len(candidate) < len(best):
            best = candidate
    return OctResult(best, candidates, cost)
