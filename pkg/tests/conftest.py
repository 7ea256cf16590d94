from __future__ import annotations

import random

import networkx as nx
import pytest

from circcrit.graph import Graph


def random_graph(rng: random.Random, max_n: int = 8) -> Graph:
    n = rng.randint(1, max_n)
    p = rng.random()
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@pytest.fixture
def rng() -> random.Random:
    return random.Random(12345)
