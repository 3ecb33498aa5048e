"""Exhaustive small-graph catalogues, one representative per isomorphism
class.

Built by vertex extension: every n-vertex graph is some (n-1)-vertex graph
plus a new vertex with an arbitrary neighbor subset. Candidates are bucketed
by cheap invariants and a Weisfeiler-Lehman hash, with exact isomorphism
checks inside buckets.
"""

from __future__ import annotations

import functools
import json
import os
from pathlib import Path

import networkx as nx

from .graphs import Graph, is_connected


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h


def _bucket_key(h: nx.Graph) -> tuple:
    degrees = tuple(sorted(d for _, d in h.degree()))
    wl = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
    return (h.number_of_edges(), degrees, wl)


@functools.lru_cache(maxsize=None)
def _all_graphs_nx(n: int) -> tuple[nx.Graph, ...]:
    """All graphs on n vertices (labels 1..n) up to isomorphism."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        g = nx.Graph()
        g.add_node(1)
        return (g,)
    reps: dict[tuple, list[nx.Graph]] = {}
    out: list[nx.Graph] = []
    for parent in _all_graphs_nx(n - 1):
        for neighbor_bits in range(1 << (n - 1)):
            h = parent.copy()
            h.add_node(n)
            for i in range(n - 1):
                if neighbor_bits >> i & 1:
                    h.add_edge(i + 1, n)
            key = _bucket_key(h)
            bucket = reps.setdefault(key, [])
            if any(nx.is_isomorphic(h, seen) for seen in bucket):
                continue
            bucket.append(h)
            out.append(h)
    return tuple(out)


def _from_networkx(h: nx.Graph) -> Graph:
    return Graph(h.number_of_nodes(), list(h.edges()))


def _cache_path(n: int) -> Path:
    root = os.environ.get("QISBENCH_CACHE_DIR") or os.path.join(
        os.path.expanduser("~"), ".cache", "qisbench"
    )
    return Path(root) / f"graphs-{n}.json"


@functools.lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    path = _cache_path(n)
    if path.is_file():
        records = json.loads(path.read_text())
        return tuple(Graph(n, [tuple(e) for e in edges]) for edges in records)
    graphs = tuple(_from_networkx(h) for h in _all_graphs_nx(n))
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps([sorted(g.edges) for g in graphs]))
    except OSError:
        pass  # cache is best-effort
    return graphs


@functools.lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class."""
    return tuple(g for g in all_graphs(n) if is_connected(g))
