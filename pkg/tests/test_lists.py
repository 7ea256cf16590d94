from __future__ import annotations

import random

import pytest

from circcrit.constructions import complete, cycle, path
from circcrit.graph import Graph
from circcrit.lists import (
    Classification,
    ListAssignment,
    PreconditionError,
    check_clique_klists,
    check_near_uniform_clique,
    check_odd_cycle_iff_nonuniform,
    check_path_endpoints_2_3,
    check_path_precoloured,
    classify_cycle_assignment,
    exhaustive_clique_check,
    exhaustive_odd_cycle_check,
    interval,
    is_4_interval_list,
    list_colouring_oracle,
    random_interval_assignment,
    satisfies_endpoint_sizes,
    solve_list,
    uniform_interval_assignments,
)

from conftest import random_graph


def test_four_interval_validator():
    assert is_4_interval_list({0, 1, 2, 3})
    assert is_4_interval_list({5, 6, 0, 1})
    assert is_4_interval_list({0, 1, 2, 3, 5})
    assert not is_4_interval_list({0, 1, 3, 4})
    assert not is_4_interval_list({0, 1, 2})


def test_solve_list_examples():
    L = ListAssignment.of(7, [{0, 1}, {5, 6, 0, 1}, {5, 6}])
    assert solve_list(path(3), (7, 2), L) is None
    uni = ListAssignment.of(7, [{0, 1, 2, 3}] * 5)
    assert solve_list(cycle(5), (7, 2), uni) is None
    one = solve_list(Graph.empty(1), (7, 2), ListAssignment.of(7, [{3}]))
    assert one is not None and one[0] == 3


def test_solver_matches_product_oracle():
    rng = random.Random(21)
    for _ in range(400):
        g = random_graph(rng, 6)
        lists = [frozenset(rng.sample(range(7), rng.randint(1, 5))) for _ in range(g.n)]
        L = ListAssignment(7, tuple(lists))
        got = solve_list(g, (7, 2), L)
        assert (got is not None) == list_colouring_oracle(g, (7, 2), L)
        if got is not None:
            assert all(got[v] in lists[v] for v in range(g.n))


def test_enlarging_lists_preserves_solvability():
    rng = random.Random(22)
    for _ in range(300):
        g = random_graph(rng, 6)
        lists = [frozenset(rng.sample(range(7), rng.randint(1, 4))) for _ in range(g.n)]
        L = ListAssignment(7, tuple(lists))
        if solve_list(g, (7, 2), L) is None:
            continue
        bigger = ListAssignment(7, tuple(x | {rng.randrange(7)} for x in lists))
        assert solve_list(g, (7, 2), bigger) is not None


def test_path_precoloured_examples():
    assert check_path_precoloured(2, ListAssignment.of(7, [{0}, interval(2, 5)]))
    assert check_path_precoloured(5, ListAssignment.of(7, [{3}] + [interval(0, 3)] * 4))


def test_path_precoloured_random():
    rng = random.Random(23)
    for _ in range(1000):
        n = rng.randint(1, 9)
        lists = list(random_interval_assignment(n, rng).lists)
        end = 0 if rng.random() < 0.5 else n - 1
        lists[end] = frozenset([rng.randrange(7)])
        assert check_path_precoloured(n, ListAssignment(7, tuple(lists)))


def test_path_precoloured_precondition():
    with pytest.raises(PreconditionError):
        check_path_precoloured(3, ListAssignment.of(7, [interval(0, 3)] * 3))


def test_path_endpoints_examples():
    assert check_path_endpoints_2_3(1, ListAssignment.of(7, [{4, 5}]))
    L = ListAssignment.of(7, [{0, 1}, interval(6, 2), {4, 5, 6}])
    assert satisfies_endpoint_sizes(L) and check_path_endpoints_2_3(3, L)
    tight = ListAssignment.of(7, [{0, 1}, {5, 6, 0, 1}, {5, 6}])
    assert not satisfies_endpoint_sizes(tight)
    assert not check_path_endpoints_2_3(3, tight)


def test_path_endpoints_random():
    rng = random.Random(24)
    for _ in range(1000):
        n = rng.randint(1, 9)
        lists = list(random_interval_assignment(n, rng).lists)
        a, b = (2, 3) if rng.random() < 0.5 else (3, 2)
        s = rng.randrange(7)
        lists[0] = interval(s, (s + a - 1) % 7)
        if n > 1:
            s = rng.randrange(7)
            lists[-1] = interval(s, (s + b - 1) % 7)
        assert check_path_endpoints_2_3(n, ListAssignment(7, tuple(lists)))


def test_classify_examples():
    uni = ListAssignment.of(7, [interval(0, 3)] * 5)
    assert classify_cycle_assignment(5, uni).classification is Classification.UNIFORM
    L = ListAssignment.of(7, [interval(0, 3), interval(4, 0), interval(0, 3)])
    # colour 2 of [0,3] has {1,2,3} disjoint from [4,0]
    assert classify_cycle_assignment(3, L).classification is Classification.SAFE
    ns = ListAssignment.of(7, [interval(1, 4), interval(0, 3), interval(1, 4), interval(1, 4), interval(1, 4)])
    tag = classify_cycle_assignment(5, ns)
    assert tag.classification in (Classification.SAFE, Classification.NEARLY_SAFE)
    with pytest.raises(PreconditionError):
        classify_cycle_assignment(3, ListAssignment.of(7, [{0, 1}] * 3))


def test_nearly_safe_example():
    from circcrit.lists import is_nearly_safe

    # v = 0 has both neighbours listed [1,4] and shares 3 colours with them
    cyc = ListAssignment.of(7, [interval(0, 3), interval(1, 4), interval(1, 4)])
    assert is_nearly_safe(3, cyc)
    assert len(cyc[0] & cyc[1]) == 3


def test_odd_cycle_examples():
    g = cycle(5)
    for L in uniform_interval_assignments(5):
        assert solve_list(g, (7, 2), L) is None
    rotated = ListAssignment.of(7, [interval(1, 4)] + [interval(0, 3)] * 4)
    assert solve_list(g, (7, 2), rotated) is not None
    assert check_odd_cycle_iff_nonuniform(9, 500, seed=1)


def test_odd_cycle_exhaustive_c5():
    checked, bad = exhaustive_odd_cycle_check(5)
    assert checked == 7**4 and bad == 0


def test_clique_examples():
    assert check_clique_klists(2, ListAssignment.of(3, [{0, 1}, {0, 1}, {0, 2}]))
    assert not check_clique_klists(2, ListAssignment.of(2, [{0, 1}] * 3))
    base = [{0, 1, 2, 3}] * 4 + [{0, 1, 2, 4}]
    assert check_clique_klists(4, ListAssignment.of(5, base))


def test_clique_exhaustive_small():
    assert exhaustive_clique_check(2) == (56, 0)
    checked, bad = exhaustive_clique_check(3)
    assert bad == 0 and checked == 8855


def test_near_uniform_examples():
    assert check_near_uniform_clique(4)
    assert check_near_uniform_clique(5)
    assert check_near_uniform_clique(6)
    a, b = interval(2, 7, 9), interval(3, 8, 9)
    from circcrit.lists import near_uniform_lists

    assert near_uniform_lists(5) == (a, b)


def test_list_assignment_json():
    L = ListAssignment.of(7, [{0, 1}, {3, 4, 5, 6}])
    assert ListAssignment.from_json(L.to_json()) == L
    with pytest.raises(ValueError):
        ListAssignment.of(7, [set()])
