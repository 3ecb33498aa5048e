"""Lower-bound gadget families for the maximal independent set problem.

Family A graphs (on 3n+1 vertices) have a maximal independent set of size
exactly 2n; family B graphs do not. The two families differ by single edge
flips, which is what drives the adversary-method query bound sqrt(m * m').
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph
from .oct_solver import enumerate_maximal_is


@dataclass
class GadgetInstance:
    family: str
    n: int
    graph: Graph
    roles: tuple[str, ...]
    green_pairs: tuple[tuple[int, int], ...]

    @property
    def target_size(self) -> int:
        """The maximal-IS size the indicator function f tests for."""
        return 2 * self.n


def build_gadget(family: str, n: int) -> GadgetInstance:
    """Family A: n red + 2n paired green + 1 black; family B: n+2 red +
    2(n-1) paired green + 1 black. Reds are mutually nonadjacent and
    nonadjacent to greens; each green pair is an edge; the black vertex is
    adjacent to everything. Layout: reds first, greens in pair order, black
    last."""
    if n < 1:
        raise ValueError("gadget parameter must be >= 1")
    if family == "A":
        reds, pairs = n, n
    elif family == "B":
        reds, pairs = n + 2, n - 1
    else:
        raise ValueError(f"unknown gadget family {family!r}")
    total = 3 * n + 1
    black = total
    roles = ["red"] * reds + ["green"] * (2 * pairs) + ["black"]
    edges = []
    green_pairs = []
    for p in range(pairs):
        a = reds + 2 * p + 1
        b = a + 1
        edges.append((a, b))
        green_pairs.append((a, b))
    edges.extend((v, black) for v in range(1, black))
    return GadgetInstance(family, n, Graph(total, edges), tuple(roles), tuple(green_pairs))


def has_maximal_is_of_size(g: Graph, t: int) -> bool:
    """The indicator f: does g contain a maximal independent set with
    exactly t vertices? Evaluated by enumeration (small gadgets only)."""
    return any(len(s) == t for s in enumerate_maximal_is(g))


def flip_relation_counts(n: int) -> tuple[int, int, float]:
    """(m, m', sqrt(m*m')): m = n single green-pair deletions taking A to B,
    m' = (n+2)(n+1)/2 red-red additions taking B to A."""
    if n < 1:
        raise ValueError("gadget parameter must be >= 1")
    m = n
    m_prime = (n + 2) * (n + 1) // 2
    return m, m_prime, math.sqrt(m * m_prime)


def classify_gadget(g: Graph) -> Optional[tuple[str, int]]:
    """Recognize a gadget graph up to labeling: (family, parameter) or None.

    Structure: a unique all-adjacent black vertex; without it the rest must
    be a perfect matching on the greens plus isolated reds.
    """
    if g.n < 4 or (g.n - 1) % 3 != 0:
        return None
    blacks = [v for v in g.vertices() if g.degree(v) == g.n - 1]
    if len(blacks) != 1:
        return None
    black = blacks[0]
    reds = 0
    pairs = 0
    for v in g.vertices():
        if v == black:
            continue
        others = [w for w in g.neighbors(v) if w != black]
        if len(others) == 0:
            reds += 1
        elif len(others) == 1:
            # Matching edge: require symmetry, count each pair once.
            w = others[0]
            partner_others = [x for x in g.neighbors(w) if x != black]
            if partner_others != [v]:
                return None
            if v < w:
                pairs += 1
        else:
            return None
    n = (g.n - 1) // 3
    if reds == n and pairs == n:
        return "A", n
    if reds == n + 2 and pairs == n - 1:
        return "B", n
    return None


def count_cross_family_flips(inst: GadgetInstance) -> int:
    """Number of single edge toggles that carry this gadget into the other
    family, found by exhaustively toggling every vertex pair."""
    other = "B" if inst.family == "A" else "A"
    g = inst.graph
    count = 0
    for u in g.vertices():
        for v in range(u + 1, g.n + 1):
            if g.has_edge(u, v):
                edges = g.edges - {(u, v)}
            else:
                edges = g.edges | {(u, v)}
            flipped = Graph(g.n, edges)
            label = classify_gadget(flipped)
            if label is not None and label[0] == other:
                count += 1
    return count


def verify_gadget_flips(n: int) -> dict:
    """Exhaustive check of the adversary relation at parameter n.

    Confirms f=1 on A and f=0 on B, that every green-pair deletion flips
    f to 0 and every red-red addition flips f to 1, and that the exhaustive
    cross-family flip counts equal m and m'.
    """
    a = build_gadget("A", n)
    b = build_gadget("B", n)
    m, m_prime, bound = flip_relation_counts(n)
    failures = []

    if not has_maximal_is_of_size(a.graph, a.target_size):
        failures.append("A-instance has no maximal IS of the target size")
    if has_maximal_is_of_size(b.graph, b.target_size):
        failures.append("B-instance unexpectedly has a maximal IS of the target size")

    for pair in a.green_pairs:
        flipped = Graph(a.graph.n, a.graph.edges - {pair})
        if has_maximal_is_of_size(flipped, a.target_size):
            failures.append(f"deleting green pair {pair} did not flip f to 0")

    reds = [v for v, role in zip(b.graph.vertices(), b.roles) if role == "red"]
    for i, u in enumerate(reds):
        for v in reds[i + 1 :]:
            flipped = Graph(b.graph.n, b.graph.edges | {(u, v)})
            if not has_maximal_is_of_size(flipped, b.target_size):
                failures.append(f"adding red edge ({u},{v}) did not flip f to 1")

    a_flips = count_cross_family_flips(a)
    if a_flips != m:
        failures.append(f"A-instance has {a_flips} cross-family flips, expected {m}")
    b_flips = count_cross_family_flips(b)
    if b_flips != m_prime:
        failures.append(f"B-instance has {b_flips} cross-family flips, expected {m_prime}")

    return {
        "n": n,
        "m": m,
        "m_prime": m_prime,
        "bound": bound,
        "failures": failures,
        "passed": not failures,
    }
