from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from circcrit.constructions import c6_expansion_labelled, complete, cycle, moser_spindle, ore_compose, path, wheel
from circcrit.graph import (
    Graph,
    GraphError,
    blocks,
    complement,
    degree,
    degree_count,
    has_hamiltonian_cycle,
    identify_vertices,
    is_isomorphic,
    relabel,
)

from conftest import random_graph, to_nx


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_degree_examples():
    assert all(degree(complete(4), v) == 3 for v in range(4))
    assert degree(moser_spindle(), 0) == 4
    assert degree(Graph.empty(1), 0) == 0


def test_degree_count_examples():
    w8 = wheel(8)
    assert degree_count(w8, 7, 3) == 7
    assert degree_count(complete(4), 2, 3) == 3
    # every neighbour of a (b, c, f, g) has degree 3 in the spindle's edge list
    G = to_nx(moser_spindle())
    oracle = sum(1 for u in G[0] if G.degree(u) == 3)
    assert degree_count(moser_spindle(), 0, 3) == oracle == 4


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 5)])
    with pytest.raises(GraphError):
        degree(complete(3), 3)


def test_complement_examples():
    assert complement(complete(4)) == Graph.empty(4)
    assert is_isomorphic(complement(cycle(5)), cycle(5))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.e + complement(g).e == g.n * (g.n - 1) // 2


def test_hamiltonian_examples():
    assert has_hamiltonian_cycle(cycle(5))
    assert not has_hamiltonian_cycle(Graph.empty(4))
    assert has_hamiltonian_cycle(complement(moser_spindle()))
    assert not has_hamiltonian_cycle(path(4))


def _nx_hamiltonian(g: Graph) -> bool:
    from itertools import permutations

    if g.n < 3:
        return False
    for perm in permutations(range(1, g.n)):
        order = (0,) + perm
        if all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def test_hamiltonian_matches_brute_force():
    rng = random.Random(3)
    for _ in range(150):
        g = random_graph(rng, 7)
        assert has_hamiltonian_cycle(g) == _nx_hamiltonian(g)


def test_block_examples():
    assert len(blocks(path(4)).blocks) == 3
    assert blocks(complete(4)).blocks == ((0, 1, 2, 3),)
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bd = blocks(bowtie)
    assert len(bd.blocks) == 2 and bd.cut_vertices == frozenset({2})


def test_blocks_match_networkx():
    rng = random.Random(5)
    for _ in range(300):
        g = random_graph(rng, 10)
        G = to_nx(g)
        ours = {frozenset(b) for b in blocks(g).blocks if len(b) > 1}
        theirs = {frozenset(c) for c in nx.biconnected_components(G)}
        assert ours == theirs
        assert blocks(g).cut_vertices == frozenset(nx.articulation_points(G))


def test_blocks_cover_every_edge_once():
    rng = random.Random(6)
    for _ in range(100):
        g = random_graph(rng, 10)
        bl = blocks(g).blocks
        for u, v in g.edges():
            assert sum(u in b and v in b for b in bl) == 1


def test_identify_claw_of_c6_expansion():
    g, lab = c6_expansion_labelled(complete(4), 0)
    h = identify_vertices(g, [lab["x'"], lab["y'"], lab["z'"], lab["w"]])
    assert (h.n, h.e) == (g.n - 3, g.e - 6)
    assert is_isomorphic(h, complete(4))


def test_identify_examples():
    g = moser_spindle()
    assert identify_vertices(g, [3]) == g
    tri = complete(3)
    h = identify_vertices(tri, [0, 1])
    assert (h.n, h.e) == (2, 1)
    with pytest.raises(GraphError):
        identify_vertices(tri, [])


def test_isomorphism_examples():
    moser = ore_compose(complete(4), (0, 1), complete(4), 0, ([1], [2, 3]))
    assert is_isomorphic(moser, moser_spindle())
    assert not is_isomorphic(complete(4), cycle(4))


@settings(max_examples=60)
@given(graphs(), st.randoms(use_true_random=False))
def test_isomorphic_to_permuted_copy(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    assert is_isomorphic(g, relabel(g, perm))


def test_isomorphism_matches_networkx():
    rng = random.Random(8)
    for _ in range(200):
        g, h = random_graph(rng, 6), random_graph(rng, 6)
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
