"""Chromatic number, k-criticality and G_{p,q}-criticality."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import networkx as nx

from .circular import CircularTarget, Colouring, as_target, chromatic_number, find_colouring
from .graph import Graph, delete_edge

__all__ = [
    "CriticalityVerdict",
    "chromatic_number",
    "is_k_critical",
    "is_h_critical",
    "edge_connectivity",
    "min_degree_and_edge_connectivity_check",
]


@dataclass(frozen=True)
class CriticalityVerdict:
    """Outcome of a criticality test.

    ``witness_kind`` is one of ``"edge"`` (deleting it leaves the graph
    uncolourable), ``"colouring"`` (the whole graph is colourable),
    ``"vertex"`` (an isolated vertex that could be deleted) or None.
    """

    is_critical: bool
    witness_kind: str | None = None
    witness: Any = None

    def __bool__(self) -> bool:
        return self.is_critical

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, Colouring):
            w = w.to_json()
        elif isinstance(w, tuple):
            w = list(w)
        return {"is_critical": self.is_critical, "witness_kind": self.witness_kind, "witness": w}


def _isolated(g: Graph) -> int | None:
    if g.n > 1:
        for v in range(g.n):
            if not g.adj[v]:
                return v
    return None


def _h_verdict(g: Graph, t: CircularTarget) -> CriticalityVerdict:
    whole = find_colouring(g, t)
    if whole is not None:
        return CriticalityVerdict(False, "colouring", whole)
    v = _isolated(g)
    if v is not None:
        return CriticalityVerdict(False, "vertex", v)
    for e in g.edges():
        if find_colouring(delete_edge(g, *e), t) is None:
            return CriticalityVerdict(False, "edge", e)
    return CriticalityVerdict(True)


def is_k_critical(g: Graph, k: int) -> CriticalityVerdict:
    """chi(g) = k and deleting any edge drops the chromatic number to k-1.

    Equivalent to being G_{k-1,1}-critical once g is known not to be
    (k-1)-colourable and to be k-colourable.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    # if every g-e is (k-1)-colourable then chi(g) <= k automatically
    return _h_verdict(g, CircularTarget(k - 1, 1)) if k > 2 else _two_critical(g)


def _two_critical(g: Graph) -> CriticalityVerdict:
    # (1,1) is not a circular clique; 1-colourable means edgeless
    if g.e == 0:
        return CriticalityVerdict(False, "colouring", Colouring(CircularTarget(2, 1), (0,) * g.n))
    v = _isolated(g)
    if v is not None:
        return CriticalityVerdict(False, "vertex", v)
    if g.e > 1:
        return CriticalityVerdict(False, "edge", g.edges()[0])
    return CriticalityVerdict(True)


def is_h_critical(g: Graph, t: CircularTarget | tuple[int, int]) -> CriticalityVerdict:
    """No (p,q)-colouring, but every edge-deleted subgraph has one."""
    return _h_verdict(g, as_target(t))


def edge_connectivity(g: Graph) -> int:
    if g.n <= 1:
        return 0
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.edge_connectivity(G)


def min_degree_and_edge_connectivity_check(g: Graph, k: int) -> bool:
    if g.n == 0:
        return False
    return min(g.degrees()) >= k - 1 and edge_connectivity(g) >= k - 1
