"""List (p,q)-colouring: 4-interval assignments on paths and cycles, and clique lemmas."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Mapping, Sequence

from .circular import CircularTarget, Colouring, as_target, cyclic_interval, find_list_colouring, interval_mask
from .constructions import complete, cycle, path
from .graph import Graph, iter_bits

P7 = 7


class PreconditionError(ValueError):
    pass


def _mask(colours: Iterable[int]) -> int:
    m = 0
    for c in colours:
        m |= 1 << c
    return m


@dataclass(frozen=True)
class ListAssignment:
    p: int
    lists: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for v, lst in enumerate(self.lists):
            if not lst:
                raise ValueError(f"empty list at vertex {v}")
            if any(not 0 <= c < self.p for c in lst):
                raise ValueError(f"list of vertex {v} leaves 0..{self.p - 1}")

    @classmethod
    def of(cls, p: int, lists: Iterable[Iterable[int]]) -> ListAssignment:
        return cls(p, tuple(frozenset(lst) for lst in lists))

    @classmethod
    def from_intervals(cls, p: int, spans: Iterable[tuple[int, int]]) -> ListAssignment:
        return cls(p, tuple(frozenset(iter_bits(interval_mask(lo, hi, p))) for lo, hi in spans))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def is_precoloured(self, v: int) -> bool:
        return len(self.lists[v]) == 1

    def is_uniform(self) -> bool:
        return len(set(self.lists)) <= 1

    def is_interval(self, v: int) -> bool:
        m = _mask(self.lists[v])
        return m == (1 << self.p) - 1 or cyclic_interval(m, self.p) is not None

    def is_4_interval_list(self, v: int) -> bool:
        return self.p == P7 and is_4_interval_list(self.lists[v])

    def is_4_interval(self) -> bool:
        return all(self.is_4_interval_list(v) for v in range(len(self)))

    def to_json(self) -> dict:
        return {"p": self.p, "lists": [sorted(lst) for lst in self.lists]}

    @classmethod
    def from_json(cls, data: Mapping) -> ListAssignment:
        return cls.of(data["p"], data["lists"])


def is_4_interval_list(lst: Iterable[int]) -> bool:
    """Subset of 0..6 of size >= 4 containing a cyclic interval of length 4."""
    colours = set(lst)
    if len(colours) < 4 or not colours <= set(range(P7)):
        return False
    return any(all((lo + i) % P7 in colours for i in range(4)) for lo in range(P7))


def interval(lo: int, hi: int, p: int = P7) -> frozenset[int]:
    return frozenset(iter_bits(interval_mask(lo, hi, p)))


def random_interval_assignment(
    n: int, rng: random.Random, *, size: int = 4, p: int = P7, non_uniform: bool = False
) -> ListAssignment:
    while True:
        starts = [rng.randrange(p) for _ in range(n)]
        if not (non_uniform and len(set(starts)) == 1):
            return ListAssignment.from_intervals(p, [(s, (s + size - 1) % p) for s in starts])


def uniform_interval_assignments(n: int) -> list[ListAssignment]:
    return [ListAssignment.from_intervals(P7, [(s, (s + 3) % P7)] * n) for s in range(P7)]


# --- solving -------------------------------------------------------------------


def solve_list(g: Graph, t: CircularTarget | tuple[int, int], L: ListAssignment) -> Colouring | None:
    """An L-(p,q)-colouring of g or None; exact."""
    t = as_target(t)
    if len(L) != g.n:
        raise ValueError("list assignment does not match the graph")
    if L.p != t.p:
        raise ValueError(f"lists are over {L.p} colours but the target has p={t.p}")
    return find_list_colouring(g, t, L.lists)


def list_colouring_oracle(g: Graph, t: CircularTarget | tuple[int, int], L: ListAssignment) -> bool:
    """Brute force over the product of the lists."""
    t = as_target(t)
    edges = g.edges()
    for choice in product(*(sorted(lst) for lst in L.lists)):
        if all(t.adjacent(choice[u], choice[v]) for u, v in edges):
            return True
    return False


def check_path_precoloured(n: int, L: ListAssignment) -> bool:
    """Path 0-1-...-(n-1) with one end precoloured and 4-interval lists elsewhere."""
    if len(L) != n or n < 1:
        raise PreconditionError("list assignment must cover the path")
    ends = [0] if n == 1 else [0, n - 1]
    ok = False
    for x in ends:
        if L.is_precoloured(x) and all(L.is_4_interval_list(v) for v in range(n) if v != x):
            ok = True
    if not ok:
        raise PreconditionError("need a precoloured endpoint and 4-interval lists on the rest")
    return solve_list(path(n), (7, 2), L) is not None


def check_path_endpoints_2_3(n: int, L: ListAssignment) -> bool:
    """Path with interval end lists and 4-interval lists inside; returns the solver verdict.

    Only the interval shapes and a minimum end-list size of 2 are enforced,
    so the both-ends-size-2 tightness example can be evaluated too.
    """
    if len(L) != n or n < 1:
        raise PreconditionError("list assignment must cover the path")
    ends = {0, n - 1}
    for v in range(n):
        if v in ends:
            if not L.is_interval(v) or len(L[v]) < 2:
                raise PreconditionError(f"endpoint {v} needs an interval list of size >= 2")
        elif not L.is_4_interval_list(v):
            raise PreconditionError(f"internal vertex {v} needs a 4-interval list")
    return solve_list(path(n), (7, 2), L) is not None


def satisfies_endpoint_sizes(L: ListAssignment) -> bool:
    """One end list of size >= 2 and the other of size >= 3."""
    a, b = len(L[0]), len(L[len(L) - 1])
    if len(L) == 1:
        return a >= 2
    return min(a, b) >= 2 and max(a, b) >= 3


class Classification(enum.Enum):
    UNIFORM = "uniform"
    SAFE = "safe"
    NEARLY_SAFE = "nearly_safe"
    OTHER = "other"


@dataclass(frozen=True)
class IntervalListTag:
    classification: Classification
    is_4_interval: bool
    is_near_uniform_2k1: bool


def _shifted(lst: frozenset[int]) -> int:
    m = 0
    for c in lst:
        for d in (-1, 0, 1):
            m |= 1 << ((c + d) % P7)
    return m


def is_safe(n: int, L: ListAssignment) -> bool:
    for u in range(n):
        for v in ((u + 1) % n, (u - 1) % n):
            target = _mask(L[v])
            for c in L[u]:
                if not _shifted(frozenset([c])) & target:
                    return True
    return False


def is_nearly_safe(n: int, L: ListAssignment) -> bool:
    for v in range(n):
        a, b = L[(v - 1) % n], L[(v + 1) % n]
        if a == b and len(L[v] & a) <= 3:
            return True
    return False


def is_near_uniform(L: ListAssignment) -> bool:
    """Exactly two distinct lists, the neighbourhoods in G_{p,2} of two non-adjacent colours."""
    p = L.p
    if p < 5 or p % 2 == 0:
        return False
    distinct = set(L.lists)
    if len(distinct) != 2:
        return False
    t = CircularTarget(p, 2)
    nbhd = {frozenset(iter_bits(t.neighbour_mask(c))): c for c in range(p)}
    cols = [nbhd.get(lst) for lst in distinct]
    return None not in cols and not t.adjacent(cols[0], cols[1])


def classify_cycle_assignment(cycle_length: int, L: ListAssignment) -> IntervalListTag:
    if len(L) != cycle_length or cycle_length < 3:
        raise PreconditionError("assignment must cover a cycle of length >= 3")
    if not L.is_4_interval():
        raise PreconditionError("not a 4-interval list assignment")
    if L.is_uniform():
        cls = Classification.UNIFORM
    elif is_safe(cycle_length, L):
        cls = Classification.SAFE
    elif is_nearly_safe(cycle_length, L):
        cls = Classification.NEARLY_SAFE
    else:
        cls = Classification.OTHER
    return IntervalListTag(cls, True, is_near_uniform(L))


def check_odd_cycle_iff_nonuniform(cycle_length: int, trials: int, seed: int = 0) -> bool:
    """Random 4-interval assignments plus all uniform ones: colourable exactly when non-uniform."""
    if cycle_length < 3 or cycle_length % 2 == 0:
        raise PreconditionError("need an odd cycle")
    rng = random.Random(seed)
    g = cycle(cycle_length)
    cases = uniform_interval_assignments(cycle_length)
    cases += [random_interval_assignment(cycle_length, rng) for _ in range(trials)]
    return all((solve_list(g, (7, 2), L) is not None) == (not L.is_uniform()) for L in cases)


def exhaustive_odd_cycle_check(cycle_length: int) -> tuple[int, int]:
    """All exact-4-interval assignments with the first list pinned to [0,3].

    Rotating every colour by one is an automorphism of G_{7,2}, so pinning
    the first list loses nothing. Returns (cases checked, mismatches).
    """
    g = cycle(cycle_length)
    spans = [interval(s, (s + 3) % P7) for s in range(P7)]
    checked = bad = 0
    for rest in product(range(P7), repeat=cycle_length - 1):
        L = ListAssignment(P7, (spans[0],) + tuple(spans[s] for s in rest))
        checked += 1
        if (solve_list(g, (7, 2), L) is not None) == L.is_uniform():
            bad += 1
    return checked, bad


def check_clique_klists(k: int, L: ListAssignment) -> bool:
    """Proper L-colouring of K_{k+1} where every list has exactly k colours."""
    if k < 2 or len(L) != k + 1 or any(len(lst) != k for lst in L.lists):
        raise PreconditionError("need k-lists on the k+1 vertices of a clique")
    p = max(max(lst) for lst in L.lists) + 1
    lists = ListAssignment(p, L.lists)
    return solve_list(complete(k + 1), (p, 1), lists) is not None


def exhaustive_clique_check(k: int, universe: int | None = None) -> tuple[int, int]:
    """Every multiset of k-subsets of the universe on K_{k+1}; returns (checked, mismatches).

    The clique's vertices are interchangeable, so multisets suffice.
    """
    universe = 2 * k if universe is None else universe
    subsets = [frozenset(s) for s in combinations(range(universe), k)]
    checked = bad = 0
    for choice in combinations_with_replacement(subsets, k + 1):
        L = ListAssignment(universe, tuple(choice))
        checked += 1
        if check_clique_klists(k, L) == L.is_uniform():
            bad += 1
    return checked, bad


def near_uniform_lists(k: int) -> tuple[frozenset[int], frozenset[int]]:
    """Neighbourhoods of colours 0 and 1 in G_{2k-1,2}: [2,2k-3] and [3,2k-2]."""
    p = 2 * k - 1
    return interval(2, 2 * k - 3, p), interval(3, 2 * k - 2, p)


def check_near_uniform_clique(k: int) -> bool:
    """Every non-uniform pattern of the two near-uniform lists on K_{k-1} is colourable."""
    if k < 4:
        raise PreconditionError("need k >= 4")
    p = 2 * k - 1
    a, b = near_uniform_lists(k)
    g = complete(k - 1)
    for pattern in product((0, 1), repeat=k - 1):
        if len(set(pattern)) == 1:
            continue
        L = ListAssignment(p, tuple(a if bit == 0 else b for bit in pattern))
        if solve_list(g, (p, 2), L) is None:
            return False
    return True
