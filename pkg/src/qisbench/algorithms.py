"""Independent set algorithms under the quantum cost model.

Covers the maximal-IS search loop in both oracle models, the degree<=2 base
cases, the randomized maximum-IS trial with amplification, the k-IS cost
formulas with the complement reduction, and greedy coloring.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .brute import BudgetExceededError
from .graphs import Graph, adjacency_masks, complement
from .grover import CostModelConfig, amplification_budget, confidence_repeats, search_all
from .querying import GraphOracle, OracleMode, QueryLedger


@dataclass
class MaximalISResult:
    vertices: frozenset[int]
    order: list[int]
    ledger: QueryLedger
    round_costs: list[float] = field(default_factory=list)

    @property
    def charged_cost(self) -> float:
        return self.ledger.charged_cost


@dataclass
class MaximumISResult:
    vertices: frozenset[int]
    trials: int
    charged_cost: float
    optimal: Optional[bool] = None


@dataclass
class Coloring:
    assignment: dict[int, int]
    num_colors: int
    round_costs: list[float]

    @property
    def charged_cost(self) -> float:
        return sum(self.round_costs)


# ---------------------------------------------------------------------------
# Maximal independent set (quantum search loop)
# ---------------------------------------------------------------------------

def _neighbor_search(
    oracle: GraphOracle,
    v: int,
    alive: set[int],
    cfg: CostModelConfig,
    rng: random.Random,
) -> tuple[set[int], float]:
    """Find all surviving neighbors of v, returning (W, charged cost).

    Matrix mode searches the surviving vertex range, charging each found
    neighbor (and the emptiness check) as an unknown-count search; list mode
    searches v's list positions with the find-and-exclude schedule.
    """
    cost = 0.0
    if oracle.mode is OracleMode.MATRIX:
        domain = sorted(alive)
        report = search_all(
            lambda i: oracle.matrix_probe(v, domain[i - 1]) == 1,
            len(domain),
            cfg,
            rng,
            per_item_charge=True,
        )
        cost += report.charged_cost
        if report.failed:
            return set(), cost
        return {domain[i - 1] for i in report.found}, cost
    degree = oracle.degree_probe(v)
    if degree == 0:
        return set(), cost
    seen: dict[int, int] = {}

    def probe(j: int) -> bool:
        w = oracle.list_probe(v, j)
        seen[j] = w
        return w in alive

    report = search_all(probe, degree, cfg, rng)
    cost += report.charged_cost
    if report.failed:
        return set(), cost
    return {seen[j] for j in report.found}, cost


def _maximal_is_core(
    oracle: GraphOracle,
    alive: set[int],
    cfg: CostModelConfig,
    rng: random.Random,
) -> tuple[list[int], list[float]]:
    """Run the search loop over the given surviving vertices; returns the
    chosen pivots in order and the per-pivot charged costs."""
    chosen: list[int] = []
    costs: list[float] = []
    alive = set(alive)
    # With injected failures, repeat each neighbor search per the
    # error-reduction rule to keep the per-round error below 1/n^2.
    repeats = 1
    if cfg.failure_probability > 0:
        n = max(oracle.graph.n, 2)
        repeats = confidence_repeats(
            cfg.failure_probability, 1.0 / n**2, cfg.confidence_repeats_base
        )
    while alive:
        v = min(alive)
        chosen.append(v)
        round_cost = 0.0
        w: set[int] = set()
        for _ in range(repeats):
            w, cost = _neighbor_search(oracle, v, alive, cfg, rng)
            round_cost += cost
            if w or cfg.failure_probability == 0:
                break
        oracle.ledger.charge(round_cost)
        costs.append(round_cost)
        alive -= w
        alive.discard(v)
    return chosen, costs


def maximal_is(
    oracle: GraphOracle,
    cfg: Optional[CostModelConfig] = None,
    rng: Optional[random.Random] = None,
) -> MaximalISResult:
    """Greedy maximal independent set: repeatedly take the lowest surviving
    vertex, find all of its surviving neighbors by quantum search, and delete
    them together with the pivot."""
    cfg = cfg or CostModelConfig()
    rng = rng or random.Random(0)
    alive = set(oracle.graph.vertices())
    chosen, costs = _maximal_is_core(oracle, alive, cfg, rng)
    return MaximalISResult(frozenset(chosen), chosen, oracle.ledger.snapshot(), costs)


def greedy_coloring(
    oracle: GraphOracle,
    cfg: Optional[CostModelConfig] = None,
    rng: Optional[random.Random] = None,
) -> Coloring:
    """Color class i is a maximal independent set of the graph surviving
    after classes 1..i-1 are deleted."""
    cfg = cfg or CostModelConfig()
    rng = rng or random.Random(0)
    alive = set(oracle.graph.vertices())
    assignment: dict[int, int] = {}
    round_costs: list[float] = []
    color = 0
    while alive:
        color += 1
        class_alive = set(alive)
        chosen, costs = _maximal_is_core(oracle, class_alive, cfg, rng)
        for v in chosen:
            assignment[v] = color
        round_costs.append(sum(costs))
        alive -= set(chosen)
    return Coloring(assignment, color, round_costs)


# ---------------------------------------------------------------------------
# Paths, cycles and the degree <= 2 base case
# ---------------------------------------------------------------------------

def mis_path(n: int) -> tuple[int, frozenset[int]]:
    """Maximum IS of the path 1-2-...-n: odd positions, size ceil(n/2)."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return (n + 1) // 2, frozenset(range(1, n + 1, 2))


def mis_cycle(n: int) -> tuple[int, frozenset[int]]:
    """Maximum IS of the cycle 1-2-...-n-1: odd positions up to n-1,
    size floor(n/2), never both 1 and n."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return n // 2, frozenset(range(1, 2 * (n // 2), 2))


def decompose_deg2(g: Graph) -> list[tuple[str, list[int]]]:
    """Split a maximum-degree <= 2 graph into components, each returned as
    ("path", traversal) or ("cycle", traversal)."""
    if g.max_degree() > 2:
        raise ValueError("decomposition requires maximum degree <= 2")
    masks = adjacency_masks(g)
    full = (1 << g.n) - 1
    comps = _deg2_components(masks, full)
    return [
        (kind, [i + 1 for i in order]) for kind, order in comps
    ]


def _deg2_components(masks: list[int], mask: int) -> list[tuple[str, list[int]]]:
    """Path/cycle decomposition of the induced subgraph on ``mask``.

    Vertices in traversals are 0-indexed bit positions.
    """
    comps: list[tuple[str, list[int]]] = []
    remaining = mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        # Collect the component.
        comp_bits = 0
        frontier = [start]
        comp_bits |= 1 << start
        order_seed = [start]
        while frontier:
            u = frontier.pop()
            nb = masks[u + 1] & mask
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if not comp_bits >> w & 1:
                    comp_bits |= 1 << w
                    frontier.append(w)
                    order_seed.append(w)
        degs = {u: (masks[u + 1] & comp_bits).bit_count() for u in order_seed}
        size = len(order_seed)
        if size >= 3 and all(d == 2 for d in degs.values()):
            kind = "cycle"
            first = min(order_seed)
        else:
            kind = "path"
            ends = [u for u in order_seed if degs[u] <= 1]
            first = min(ends)
        # Linear traversal from the chosen start.
        traversal = [first]
        prev = -1
        cur = first
        for _ in range(size - 1):
            nb = masks[cur + 1] & comp_bits
            nxt = None
            while nb:
                w = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if w != prev:
                    nxt = w
                    break
            prev, cur = cur, nxt
            traversal.append(cur)
        comps.append((kind, traversal))
        remaining &= ~comp_bits
    return comps


def _deg2_mis_mask(masks: list[int], mask: int) -> int:
    """Maximum IS of a degree <= 2 induced subgraph: alternate vertices along
    each path, and along each cycle stopping short of closing it."""
    out = 0
    for kind, traversal in _deg2_components(masks, mask):
        size = len(traversal)
        take = size // 2 if kind == "cycle" else (size + 1) // 2
        for idx in range(take):
            out |= 1 << traversal[2 * idx]
    return out


# ---------------------------------------------------------------------------
# Randomized maximum independent set
# ---------------------------------------------------------------------------

def trial_step(masks: list[int], mask: int) -> Optional[tuple[int, int, int]]:
    """One branching step of the randomized trial on the surviving set.

    Returns None when the surviving graph has maximum degree <= 2 (base
    case), else (pivot, mask after deleting pivot, mask after deleting the
    closed neighborhood). The pivot is the lowest-index maximum-degree
    vertex.
    """
    best_v = -1
    best_deg = -1
    mm = mask
    while mm:
        v = (mm & -mm).bit_length() - 1
        mm &= mm - 1
        deg = (masks[v + 1] & mask).bit_count()
        if deg > best_deg:
            best_deg = deg
            best_v = v
    if best_deg <= 2:
        return None
    bit = 1 << best_v
    return best_v + 1, mask & ~bit, mask & ~(bit | masks[best_v + 1])


def max_is_trial(g: Graph, rng: random.Random) -> frozenset[int]:
    """One run of the probabilistic core: branch on a fair coin at the
    lowest-index maximum-degree vertex until degree <= 2, then solve the
    path/cycle remainder exactly. Always returns an independent set."""
    masks = adjacency_masks(g)
    mask = (1 << g.n) - 1
    chosen = 0
    while True:
        step = trial_step(masks, mask)
        if step is None:
            chosen |= _deg2_mis_mask(masks, mask)
            break
        v, mask_drop, mask_take = step
        if rng.getrandbits(1):
            chosen |= 1 << (v - 1)
            mask = mask_take
        else:
            mask = mask_drop
    return frozenset(i + 1 for i in range(g.n) if chosen >> i & 1)


def maximum_is(
    g: Graph,
    cfg: Optional[CostModelConfig] = None,
    rng: Optional[random.Random] = None,
) -> MaximumISResult:
    """Amplified randomized maximum IS: run the trial ceil(c_a * 2^(n/5))
    times (the 1/sqrt(epsilon) budget for epsilon = 2^(-2n/5)) and keep the
    largest set found. Charged cost is the number of trials."""
    cfg = cfg or CostModelConfig()
    rng = rng or random.Random(0)
    if g.n == 0:
        return MaximumISResult(frozenset(), 0, 0.0)
    epsilon = 2.0 ** (-2 * g.n / 5)
    budget = amplification_budget(epsilon, cfg.amplify_constant)
    best: frozenset[int] = frozenset()
    for _ in range(budget):
        candidate = max_is_trial(g, rng)
        if len(candidate) > len(best):
            best = candidate
    return MaximumISResult(best, budget, float(budget))


def exact_success_prob(g: Graph, max_n: int = 16) -> Fraction:
    """Exact probability that one randomized trial returns a maximum IS.

    Recurses over the trial's own branching (same pivot rule), weighting each
    coin by 1/2 and crediting a branch only when its subproblem can still
    reach the parent's independence number. Exact dyadic arithmetic.
    """
    if g.n > max_n:
        raise BudgetExceededError(f"exact recursion limited to n <= {max_n}")
    masks = adjacency_masks(g)
    alpha_memo: dict[int, int] = {0: 0}

    def alpha(mask: int) -> int:
        cached = alpha_memo.get(mask)
        if cached is not None:
            return cached
        v = (mask & -mask).bit_length() - 1
        bit = 1 << v
        value = max(alpha(mask & ~bit), 1 + alpha(mask & ~(bit | masks[v + 1])))
        alpha_memo[mask] = value
        return value

    s_memo: dict[int, Fraction] = {}

    def s(mask: int) -> Fraction:
        cached = s_memo.get(mask)
        if cached is not None:
            return cached
        step = trial_step(masks, mask)
        if step is None:
            value = Fraction(1)
        else:
            _, mask_drop, mask_take = step
            target = alpha(mask)
            value = Fraction(0)
            if alpha(mask_drop) == target:
                value += Fraction(1, 2) * s(mask_drop)
            if alpha(mask_take) + 1 == target:
                value += Fraction(1, 2) * s(mask_take)
        s_memo[mask] = value
        return value

    return s((1 << g.n) - 1)


# ---------------------------------------------------------------------------
# k-independent set (complement reduction) and its cost formula
# ---------------------------------------------------------------------------

def kis_cost_formula(n: int, k: int) -> tuple[Fraction, float]:
    """Query-cost exponent for finding a size-k independent set:
    (5k-2)/(2k+4) for k <= 5, else 2k/(k+1). Returns (exponent, n**exponent)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if k <= 5:
        exponent = Fraction(5 * k - 2, 2 * k + 4)
    else:
        exponent = Fraction(2 * k, k + 1)
    return exponent, float(n) ** float(exponent)


def _find_k_clique(g: Graph, k: int) -> Optional[frozenset[int]]:
    adj = {v: set(g.neighbors(v)) for v in g.vertices()}

    def extend(clique: list[int], candidates: list[int]) -> Optional[frozenset[int]]:
        if len(clique) == k:
            return frozenset(clique)
        if len(clique) + len(candidates) < k:
            return None
        for i, v in enumerate(candidates):
            narrowed = [u for u in candidates[i + 1 :] if u in adj[v]]
            found = extend(clique + [v], narrowed)
            if found is not None:
                return found
        return None

    return extend([], list(g.vertices()))


def k_independent_set(g: Graph, k: int) -> Optional[frozenset[int]]:
    """Independent set of size exactly k, or None: a size-k clique in the
    complement graph, found by classical backtracking (the quantum walk
    behind the cost formula is modeled by kis_cost_formula only)."""
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= {g.n}")
    return _find_k_clique(complement(g), k)
