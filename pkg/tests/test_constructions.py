from __future__ import annotations

import networkx as nx
import pytest

from circcrit.circular import circular_chromatic_number, find_colouring
from circcrit.constructions import (
    Family,
    NamedGraphSpec,
    c6_expansion,
    c6_expansion_labelled,
    claw,
    complete,
    corpus_generate,
    cycle,
    indicator_compose,
    k_ore_family,
    moser_spindle,
    mycielski,
    ore_compose,
    path,
    wheel,
)
from circcrit.critical import is_k_critical
from circcrit.density import kostochka_yancey_bound
from circcrit.gallai import Shape, gallai_tree
from circcrit.graph import GraphError, is_isomorphic

from conftest import to_nx


def test_wheel_examples():
    assert is_isomorphic(wheel(4), complete(4))
    for k in range(1, 6):
        w = wheel(2 * k + 2)
        assert (w.n, w.e) == (2 * k + 2, 4 * k + 2)
    w6 = wheel(6)
    assert (w6.n, w6.e) == (6, 10) and circular_chromatic_number(w6) == 4


def test_wheel_matches_networkx():
    for n in range(4, 13):
        assert nx.is_isomorphic(to_nx(wheel(n)), nx.wheel_graph(n))


def test_moser_examples():
    m = moser_spindle()
    assert (m.n, m.e) == (7, 11)
    assert is_k_critical(m, 4)
    assert circular_chromatic_number(m) == pytest.approx(3.5)


def test_ore_compose_examples():
    for xy in complete(4).edges():
        for z in range(4):
            others = [u for u in range(4) if u != z]
            g = ore_compose(complete(4), xy, complete(4), z, ([others[0]], others[1:]))
            assert (g.n, g.e) == (7, 11)
            assert is_isomorphic(g, moser_spindle())
            assert is_k_critical(g, 4)


def test_ore_compose_rejects_bad_split():
    with pytest.raises(GraphError):
        ore_compose(complete(4), (0, 1), complete(4), 0, ([], [1, 2, 3]))
    with pytest.raises(GraphError):
        ore_compose(complete(4), (0, 1), complete(4), 0, ([1], [2]))


def test_k_ore_family():
    assert k_ore_family(4, 0, 3) == [complete(4)]
    assert is_isomorphic(k_ore_family(4, 1, 3)[1], moser_spindle())
    for seed in range(3):
        for g in k_ore_family(4, 3, seed):
            assert g.e == kostochka_yancey_bound(4, g.n)
        for g in k_ore_family(5, 2, seed):
            assert g.e == kostochka_yancey_bound(5, g.n)


def test_k_ore_family_is_critical():
    for g in k_ore_family(4, 3, 11):
        if g.n <= 13:
            assert is_k_critical(g, 4)


def test_mycielski_examples():
    gr = mycielski(cycle(5))
    assert (gr.n, gr.e) == (11, 20)
    assert circular_chromatic_number(gr) == 4 and is_k_critical(gr, 4)
    # the standard construction gives K2 plus an isolated vertex, not P3
    m1 = mycielski(complete(1))
    assert (m1.n, m1.e) == (3, 1) and not is_isomorphic(m1, path(3))
    assert nx.is_isomorphic(to_nx(mycielski(complete(2))), nx.cycle_graph(5))


def test_mycielski_matches_networkx():
    for g in (complete(1), complete(3), cycle(5), cycle(7), moser_spindle()):
        assert nx.is_isomorphic(to_nx(mycielski(g)), nx.mycielskian(to_nx(g)))


def test_c6_expansion_examples():
    g = c6_expansion(complete(4), 0)
    assert (g.n, g.e) == (7, 12)
    assert is_k_critical(g, 4) and find_colouring(g, (7, 2)) is None
    report = gallai_tree(g, 4)
    assert report.shapes() == [Shape.CLAW]
    assert is_isomorphic(report.subgraph, claw())


def test_c6_expansion_labels():
    g, lab = c6_expansion_labelled(wheel(8), 0)
    assert sorted(g.neighbours(lab["w"])) == sorted([lab["x'"], lab["y'"], lab["z'"]])
    assert g.has_edge(lab["x'"], lab["y"]) and not g.has_edge(lab["x'"], lab["x"])
    with pytest.raises(GraphError):
        c6_expansion(wheel(8), 7)


def test_indicator_examples():
    h = indicator_compose(complete(4), 4)
    assert (h.n, h.e) == (16, 18)
    assert indicator_compose(moser_spindle(), 2) == moser_spindle()
    for g in (complete(4), moser_spindle()):
        h = indicator_compose(g, 4)
        assert (find_colouring(g, (7, 2)) is None) == (find_colouring(h, (7, 3)) is None)


def test_named_specs():
    assert NamedGraphSpec(Family.WHEEL, {"n": 8}).build() == wheel(8)
    assert NamedGraphSpec(Family.C6_EXPANSION, {"vertex": 0}).build(complete(4)) == c6_expansion(complete(4), 0)
    with pytest.raises(ValueError):
        NamedGraphSpec(Family.MYCIELSKI).build()


def test_corpus():
    corpus = corpus_generate(1, 20)
    names = {e.name for e in corpus}
    assert {"K4", "W6", "W8", "moser", "grotzsch", "c6(K4)", "c6(W8)"} <= names
    assert all(e.graph.n <= 20 for e in corpus)
    assert all(e.graph.n <= 10 for e in corpus_generate(1, 10))
    for e in corpus:
        if e.tags["no_72"]:
            assert find_colouring(e.graph, (7, 2)) is None, e.name
    c6w8 = next(e for e in corpus if e.name == "c6(W8)")
    comps = gallai_tree(c6w8.graph, 4).components
    assert any(c.shape is Shape.PATH and len(c.vertices) == 4 for c in comps)


def test_corpus_is_deterministic():
    a = [(e.name, e.graph) for e in corpus_generate(5, 20)]
    b = [(e.name, e.graph) for e in corpus_generate(5, 20)]
    assert a == b
