from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest

from circcrit.constructions import c6_expansion, complete, corpus_generate, cycle, moser_spindle, wheel
from circcrit.density import (
    THRESHOLD,
    conjectured_bound,
    discharging_audit,
    evaluate_bounds,
    is_exception,
    kostochka_yancey_bound,
    main_bound,
    verify_main_theorem,
)
from circcrit.graph import Graph


def test_kostochka_yancey_examples():
    assert kostochka_yancey_bound(4, 7) == 11 == moser_spindle().e
    assert kostochka_yancey_bound(4, 4) == 6
    assert kostochka_yancey_bound(6, 6) == 15


def test_kostochka_yancey_is_ceiling():
    import math

    for k in range(4, 9):
        for v in range(k, 30):
            exact = Fraction((k + 1) * (k - 2) * v - k * (k - 3), 2 * (k - 1))
            assert kostochka_yancey_bound(k, v) == math.ceil(exact)


def test_bound_examples():
    k4 = evaluate_bounds(complete(4))
    assert k4.main_bound == Fraction(34, 5) and not k4.satisfies["main"]
    w6 = evaluate_bounds(wheel(6))
    assert w6.main_bound == Fraction(51, 5) and not w6.satisfies["main"]
    m = evaluate_bounds(moser_spindle())
    assert m.conj_bound == Fraction(169, 15) and not m.satisfies["conjectured"]
    assert m.ky_equality


def test_discharging_w8():
    led = discharging_audit(wheel(8))
    rim = led.final[0]
    assert rim == 3 + (7 - THRESHOLD) / 7 == Fraction(123, 35)
    assert led.final[7] == THRESHOLD
    (comp,) = led.components
    assert comp.charge == Fraction(123, 5) and comp.threshold == Fraction(119, 5) and comp.safe
    assert led.conserved


def test_four_regular_vacuous():
    g = nx.circulant_graph(9, [1, 2])
    h = Graph.from_edges(9, list(g.edges()))
    led = discharging_audit(h)
    assert led.components == [] and led.all_safe
    assert all(x == 4 for x in led.final)


def test_c6_w8_safe():
    g = c6_expansion(wheel(8), 0)
    led = discharging_audit(g)
    assert led.all_safe and sum(led.final) == 2 * g.e


def test_conservation_on_corpus():
    for e in corpus_generate(1, 20):
        led = discharging_audit(e.graph)
        assert sum(led.final) == 2 * e.graph.e and led.conserved
        assert all(isinstance(x, Fraction) for x in led.final)


def test_main_theorem():
    certified = [e.graph for e in corpus_generate(1, 20) if e.tags["four_critical"] and e.tags["no_72"]]
    assert verify_main_theorem(certified, certified=True)
    assert verify_main_theorem([wheel(8)])
    assert verify_main_theorem([complete(4)])
    below = [g for g in certified if g.e < main_bound(g.n)]
    assert len(below) == 2 and all(is_exception(g) for g in below)
    with pytest.raises(ValueError):
        verify_main_theorem([moser_spindle()])


def test_conjectured_bound_values():
    assert conjectured_bound(7) == Fraction(169, 15)
    assert main_bound(8) == Fraction(68, 5)


def test_odd_cycle_wheel_density():
    # W_{2k+2} has 4k+2 edges, at least 17(2k+2)/10 once k >= 3
    for k in range(1, 6):
        w = wheel(2 * k + 2)
        assert (w.e >= main_bound(w.n)) == (k >= 3)
