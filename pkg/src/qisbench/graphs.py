"""Immutable simple undirected graphs with matrix and list views.

Vertices are 1-indexed (1..n), matching the DIMACS edge format. Graphs are
frozen after construction and safe for concurrent read-only use.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Optional


class DimacsError(ValueError):
    """Raised on malformed DIMACS input; message names the offending line."""


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph on vertices 1..n.

    Exposes both views of the same edge set: ``has_edge`` (adjacency matrix)
    and ``neighbors`` (sorted adjacency lists).
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside 1..{n}")
            norm.add(_normalize_edge(u, v))
        self.n = n
        self.edges = frozenset(norm)
        adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj[1:]), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def adjacency_masks(g: Graph) -> list[int]:
    """Neighborhood bitmasks, ``masks[v] >> (u-1) & 1`` iff {u,v} is an edge.

    Index 0 is unused so masks line up with 1-indexed vertices.
    """
    masks = [0] * (g.n + 1)
    for u, v in g.edges:
        masks[u] |= 1 << (v - 1)
        masks[v] |= 1 << (u - 1)
    return masks


# ---------------------------------------------------------------------------
# DIMACS edge format I/O
# ---------------------------------------------------------------------------

def load_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format: 'c' comments, one 'p edge n m' header,
    'e u v' edge lines. Duplicate edges collapse silently; self-loops and
    out-of-range endpoints are errors naming the line.
    """
    n: Optional[int] = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0:
                raise DimacsError(f"line {lineno}: negative vertex count")
        elif fields[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise DimacsError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed edge {line!r}") from None
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: endpoint out of range in {line!r}")
            edges.add(_normalize_edge(u, v))
        else:
            raise DimacsError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise DimacsError("missing problem line")
    return Graph(n, edges)


def dump_dimacs(g: Graph) -> str:
    """Serialize to DIMACS edge format, edges sorted lexicographically."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a Mersenne Twister stream seeded by ``seed``; pairs are
    drawn in fixed (u, v) lexicographic order so output is reproducible."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def gen_petersen() -> Graph:
    """Petersen graph: outer 5-cycle 1..5, inner pentagram 6..10, spokes."""
    edges = [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 5 + (i + 1) % 5 + 1) for i in range(1, 6)]
    edges += [(i, i + 5) for i in range(1, 6)]
    return Graph(10, edges)


# ---------------------------------------------------------------------------
# Derived graphs
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return (G_{-S}, labels) where surviving vertices are relabeled to a
    contiguous range and ``labels[i-1]`` is the original index of vertex i."""
    removed = set(s)
    for v in removed:
        if not (1 <= v <= g.n):
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    labels = tuple(v for v in g.vertices() if v not in removed)
    index = {old: new for new, old in enumerate(labels, start=1)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u not in removed and v not in removed
    ]
    return Graph(len(labels), edges), labels


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    kept = set(keep)
    return delete_vertices(g, [v for v in g.vertices() if v not in kept])


def is_bipartite(g: Graph) -> tuple[bool, Optional[dict[int, int]]]:
    """BFS 2-coloring. Returns (True, coloring) when g has no odd cycle."""
    color: dict[int, int] = {}
    for start in g.vertices():
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, color


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, in order of least vertex."""
    seen: set[int] = set()
    comps = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
