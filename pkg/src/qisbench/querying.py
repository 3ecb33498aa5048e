"""Oracle access to graphs with per-probe query accounting.

The two access models: matrix (probe single adjacency-matrix entries) and
list (probe degrees and adjacency-list positions). Every probe increments
exactly one ledger counter; the graph itself is never mutated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graphs import Graph


class OracleMode(str, enum.Enum):
    MATRIX = "matrix"
    LIST = "list"


class OracleModeError(RuntimeError):
    """Probe kind does not match the oracle's access mode."""


@dataclass
class QueryLedger:
    """Counts classical probes plus the charged quantum-model cost."""

    matrix_queries: int = 0
    list_queries: int = 0
    degree_queries: int = 0
    charged_cost: float = 0.0

    def reset(self) -> None:
        self.matrix_queries = 0
        self.list_queries = 0
        self.degree_queries = 0
        self.charged_cost = 0.0

    def charge(self, cost: float) -> None:
        if cost < 0:
            raise ValueError("charged cost must be nonnegative")
        self.charged_cost += cost

    def snapshot(self) -> "QueryLedger":
        return QueryLedger(
            self.matrix_queries,
            self.list_queries,
            self.degree_queries,
            self.charged_cost,
        )

    def total_classical(self) -> int:
        return self.matrix_queries + self.list_queries + self.degree_queries


@dataclass
class GraphOracle:
    """Read-only access to a graph in one mode, metered by a ledger."""

    graph: Graph
    mode: OracleMode
    ledger: QueryLedger = field(default_factory=QueryLedger)

    def matrix_probe(self, u: int, v: int) -> int:
        if self.mode is not OracleMode.MATRIX:
            raise OracleModeError("matrix probe on a list-mode oracle")
        if not (1 <= u <= self.graph.n and 1 <= v <= self.graph.n):
            raise ValueError(f"probe ({u},{v}) outside 1..{self.graph.n}")
        self.ledger.matrix_queries += 1
        return 1 if self.graph.has_edge(u, v) else 0

    def list_probe(self, v: int, j: int) -> int:
        """The j-th neighbor of v (1-indexed position in the sorted list)."""
        if self.mode is not OracleMode.LIST:
            raise OracleModeError("list probe on a matrix-mode oracle")
        neighbors = self.graph.neighbors(v)
        if not (1 <= j <= len(neighbors)):
            raise ValueError(f"position {j} outside 1..{len(neighbors)} for vertex {v}")
        self.ledger.list_queries += 1
        return neighbors[j - 1]

    def degree_probe(self, v: int) -> int:
        if self.mode is not OracleMode.LIST:
            raise OracleModeError("degree probe on a matrix-mode oracle")
        if not (1 <= v <= self.graph.n):
            raise ValueError(f"vertex {v} outside 1..{self.graph.n}")
        self.ledger.degree_queries += 1
        return self.graph.degree(v)
