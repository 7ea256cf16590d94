from __future__ import annotations

import pytest

from circcrit.constructions import c6_expansion, c6_expansion_labelled, complete, corpus_generate, cycle, moser_spindle, mycielski, wheel
from circcrit.gallai import (
    AuditPreconditionError,
    Shape,
    alternating_path_holds,
    audit_alternating_path,
    audit_no_kminus1_clique,
    audit_path3_structure,
    audit_structure_theorem,
    blocks_are_cliques_or_odd_cycles,
    classify_shape,
    degree3_paths_of_length2,
    gallai_tree,
    is_odd_wheel,
    path3_holds,
    _ordered_path,
)


def certified_corpus():
    return [e for e in corpus_generate(1, 20) if e.tags["four_critical"] and e.tags["no_72"]]


def test_gallai_tree_examples():
    w8 = gallai_tree(wheel(8), 4)
    assert [(len(c.vertices), c.shape) for c in w8.components] == [(7, Shape.ODD_CYCLE)]
    gr = gallai_tree(mycielski(cycle(5)), 4)
    assert gr.shapes() == [Shape.ISOLATED] * 5
    assert gallai_tree(c6_expansion(complete(4), 0), 4).shapes() == [Shape.CLAW]


def test_classify_shape():
    assert classify_shape(cycle(5), list(range(5))) is Shape.ODD_CYCLE
    assert classify_shape(cycle(6), list(range(6))) is Shape.OTHER
    assert classify_shape(complete(4), [0, 1, 2]) is Shape.ODD_CYCLE
    assert classify_shape(complete(4), [0, 1, 2, 3]) is Shape.OTHER
    assert classify_shape(complete(4), [0, 1]) is Shape.PATH


def test_gallai_blocks_on_corpus():
    for e in corpus_generate(1, 20):
        assert blocks_are_cliques_or_odd_cycles(e.graph, gallai_tree(e.graph, 4)), e.name


def test_structure_examples():
    assert audit_structure_theorem(wheel(6))
    g = c6_expansion(wheel(8), 0)
    assert audit_structure_theorem(g)
    assert sorted(s.value for s in gallai_tree(g, 4).shapes()) == ["claw", "path"]
    with pytest.raises(AuditPreconditionError):
        audit_structure_theorem(moser_spindle())


def test_no_triangle_examples():
    assert audit_no_kminus1_clique(wheel(6), 4)
    assert audit_no_kminus1_clique(c6_expansion(complete(4), 0), 4)
    with pytest.raises(AuditPreconditionError):
        audit_no_kminus1_clique(complete(4), 4)


def test_path3_examples():
    g, lab = c6_expansion_labelled(complete(4), 0)
    assert path3_holds(g, lab["x'"], lab["w"], lab["y'"])
    w8 = wheel(8)
    assert all(path3_holds(w8, *t) for t in degree3_paths_of_length2(w8))
    assert audit_path3_structure(c6_expansion(wheel(8), 0))


def test_alternating_examples():
    for base, length in ((wheel(8), 4), (wheel(10), 6)):
        g = c6_expansion(base, 0)
        comps = [c for c in gallai_tree(g, 4).components if c.shape is Shape.PATH]
        assert [len(c.vertices) for c in comps] == [length]
        assert alternating_path_holds(g, _ordered_path(g, comps[0].vertices))
        assert audit_alternating_path(g)
    assert audit_alternating_path(wheel(8))


def test_alternating_fails_on_unrelated_path():
    # a long path with pendant structure that has no shared neighbours
    from circcrit.graph import Graph

    g = Graph.from_edges(
        11,
        [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (3, 9), (4, 10)],
    )
    assert not alternating_path_holds(g, [0, 1, 2, 3])


def test_odd_wheel_examples():
    assert is_odd_wheel(wheel(6))
    assert not is_odd_wheel(wheel(7))
    assert is_odd_wheel(complete(4))
    assert not is_odd_wheel(moser_spindle())


def test_audits_on_certified_corpus():
    for e in certified_corpus():
        g = e.graph
        assert audit_structure_theorem(g, certified=True), e.name
        if e.name != "K4":
            assert audit_no_kminus1_clique(g, 4, certified=True), e.name
        assert audit_path3_structure(g, certified=True), e.name
        assert audit_alternating_path(g, certified=True), e.name


def test_report_json():
    data = gallai_tree(wheel(8), 4).to_json()
    assert data["components"][0]["shape"] == "odd_cycle"
    assert data["contains_clique_k_minus_1"] is False
