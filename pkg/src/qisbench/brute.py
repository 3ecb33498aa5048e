"""Brute-force reference implementations used solely for verification.

These prioritize obvious correctness over speed; budgets fail loudly so
verification can never pass vacuously on truncated work.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graphs import Graph, delete_vertices, is_bipartite


@dataclass
class OracleBudget:
    """Maximum vertex counts before each oracle refuses to run."""

    alpha: int = 25
    oct: int = 15
    clique: int = 12
    enumeration: int = 16


DEFAULT_BUDGET = OracleBudget()


class BudgetExceededError(RuntimeError):
    pass


def _check_budget(name: str, n: int, limit: int) -> None:
    if n > limit:
        raise BudgetExceededError(f"{name} oracle limited to n <= {limit}, got {n}")


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = list(s)
    for v in members:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    return all(not g.has_edge(u, v) for u, v in combinations(members, 2))


def is_maximal_is(g: Graph, s: Iterable[int]) -> bool:
    members = set(s)
    if not is_independent(g, members):
        return False
    for v in g.vertices():
        if v not in members and not any(w in members for w in g.neighbors(v)):
            return False
    return True


def brute_alpha(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, frozenset[int]]:
    """Exact independence number with a witness, by branch and bound on the
    lowest-index vertex with the trivial remaining-vertices bound."""
    _check_budget("alpha", g.n, budget.alpha)
    adj = {v: set(g.neighbors(v)) for v in g.vertices()}
    best_size = 0
    best_set: frozenset[int] = frozenset()

    def extend(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best_size, best_set
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_set = frozenset(chosen)
        if len(chosen) + len(candidates) <= best_size:
            return
        if not candidates:
            return
        v, rest = candidates[0], candidates[1:]
        extend(chosen + [v], [u for u in rest if u not in adj[v]])
        extend(chosen, rest)

    extend([], list(g.vertices()))
    return best_size, best_set


def brute_oct(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, frozenset[int]]:
    """Minimum odd cycle transversal by scanning subsets in increasing size."""
    _check_budget("oct", g.n, budget.oct)
    for size in range(g.n + 1):
        for subset in combinations(g.vertices(), size):
            remainder, _ = delete_vertices(g, subset)
            if is_bipartite(remainder)[0]:
                return size, frozenset(subset)
    raise AssertionError("unreachable: deleting all vertices is bipartite")


def brute_has_k_clique(
    g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """True iff some k vertices are pairwise adjacent, by backtracking with
    adjacency pruning."""
    _check_budget("clique", g.n, budget.clique)
    if k < 0:
        raise ValueError("clique size must be nonnegative")
    if k == 0:
        return True
    adj = {v: set(g.neighbors(v)) for v in g.vertices()}

    def extend(clique_size: int, candidates: list[int]) -> bool:
        if clique_size == k:
            return True
        if clique_size + len(candidates) < k:
            return False
        for i, v in enumerate(candidates):
            narrowed = [u for u in candidates[i + 1 :] if u in adj[v]]
            if extend(clique_size + 1, narrowed):
                return True
        return False

    return extend(0, list(g.vertices()))


def brute_maximal_independent_sets(
    g: Graph, budget: Optional[int] = 12
) -> list[frozenset[int]]:
    """All maximal independent sets via the 2^n subset filter (test oracle)."""
    if budget is not None and g.n > budget:
        raise BudgetExceededError(f"subset filter limited to n <= {budget}")
    out = []
    verts = list(g.vertices())
    for bits in range(1 << g.n):
        subset = [v for i, v in enumerate(verts) if bits >> i & 1]
        if is_maximal_is(g, subset):
            out.append(frozenset(subset))
    return out
