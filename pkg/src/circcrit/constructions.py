"""Graph families and graph operations used to build the test corpus.

Wheel naming: ``wheel(n)`` has n vertices in total (a rim cycle on n-1
vertices plus a hub). A wheel is called *odd* when its rim is an odd cycle,
which happens exactly when n is even; so W4 = K4, W6, W8, ... are the odd
wheels.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Any, Sequence

from .graph import Graph, GraphError, delete_vertices, iter_bits


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    """W_n: rim ``0..n-2`` in cyclic order, hub ``n-1``."""
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


MOSER_LABELS = "abcdefg"
MOSER_EDGES = ("ab", "ac", "af", "ag", "bc", "bd", "cd", "de", "ef", "eg", "fg")


def moser_spindle() -> Graph:
    """Moser spindle with a..g mapped to 0..6."""
    idx = {c: i for i, c in enumerate(MOSER_LABELS)}
    return Graph.from_edges(7, [(idx[a], idx[b]) for a, b in MOSER_EDGES])


def claw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def ore_compose(
    g1: Graph,
    xy: tuple[int, int],
    g2: Graph,
    z: int,
    split: tuple[Sequence[int], Sequence[int]],
) -> Graph:
    """Delete ``xy`` from g1, split ``z`` of g2 along ``split`` and glue z'->x, z''->y.

    g1 keeps its labels; the vertices of g2 other than z are appended in order.
    """
    x, y = xy
    if not g1.has_edge(x, y):
        raise GraphError(f"{x}-{y} is not an edge of the first graph")
    g2._check(z)
    part1, part2 = set(split[0]), set(split[1])
    if not part1 or not part2:
        raise GraphError("both sides of the split must be non-empty")
    if part1 & part2 or part1 | part2 != set(iter_bits(g2.adj[z])):
        raise GraphError("split must partition the neighbourhood of z")
    others = [v for v in range(g2.n) if v != z]
    index = {v: g1.n + i for i, v in enumerate(others)}
    edges = [e for e in g1.edges() if set(e) != {x, y}]
    for u, v in g2.edges():
        if z not in (u, v):
            edges.append((index[u], index[v]))
    edges += [(x, index[u]) for u in sorted(part1)]
    edges += [(y, index[u]) for u in sorted(part2)]
    return Graph.from_edges(g1.n + g2.n - 1, edges)


def _random_split(nbrs: list[int], rng: random.Random) -> tuple[list[int], list[int]]:
    while True:
        side = [rng.random() < 0.5 for _ in nbrs]
        if any(side) and not all(side):
            return [u for u, s in zip(nbrs, side) if s], [u for u, s in zip(nbrs, side) if not s]


def k_ore_family(k: int, steps: int, seed: int) -> list[Graph]:
    """K_k followed by ``steps`` seeded Ore compositions.

    Step i composes the latest graph (edge drawn uniformly) with a uniformly
    chosen earlier member (vertex and split drawn uniformly).
    """
    if k < 4 or steps < 0:
        raise ValueError("need k >= 4 and steps >= 0")
    rng = random.Random(seed)
    family = [complete(k)]
    for _ in range(steps):
        g1 = family[-1]
        g2 = rng.choice(family)
        xy = rng.choice(g1.edges())
        z = rng.randrange(g2.n)
        split = _random_split(g2.neighbours(z), rng)
        family.append(ore_compose(g1, xy, g2, z, split))
    return family


def mycielski(g: Graph) -> Graph:
    """Vertices: originals 0..n-1, shadows n..2n-1, apex 2n."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges += [(u, n + v), (v, n + u)]
    edges += [(n + v, 2 * n) for v in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def c6_expansion_labelled(g: Graph, v: int) -> tuple[Graph, dict[str, int]]:
    """C6-expansion at a degree-3 vertex, with the indices of the new vertices.

    ``v`` is deleted (later vertices shift down by one); x', y', z', w are
    appended in that order, where x < y < z are the old neighbours of v.
    """
    g._check(v)
    nbrs = g.neighbours(v)
    if len(nbrs) != 3:
        raise GraphError(f"vertex {v} has degree {len(nbrs)}, expected 3")
    rest, keep = delete_vertices(g, [v])
    new = {old: i for i, old in enumerate(keep)}
    x, y, z = (new[u] for u in nbrs)
    m = rest.n
    xp, yp, zp, w = m, m + 1, m + 2, m + 3
    added = [(xp, y), (xp, z), (xp, w), (yp, x), (yp, z), (yp, w), (zp, x), (zp, y), (zp, w)]
    out = Graph.from_edges(m + 4, rest.edges() + added)
    return out, {"x": x, "y": y, "z": z, "x'": xp, "y'": yp, "z'": zp, "w": w}


def c6_expansion(g: Graph, v: int) -> Graph:
    return c6_expansion_labelled(g, v)[0]


def indicator_compose(g: Graph, path_len: int) -> Graph:
    """Replace every edge uv by a path on ``path_len`` vertices from u to v.

    Interior path vertices are appended edge by edge in ``g.edges()`` order.
    """
    if path_len < 2:
        raise ValueError("path_len must be at least 2")
    inner = path_len - 2
    n = g.n
    edges = []
    for u, v in g.edges():
        chain = [u] + list(range(n, n + inner)) + [v]
        n += inner
        edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


class Family(enum.Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    WHEEL = "wheel"
    MOSER_SPINDLE = "moser"
    MYCIELSKI = "mycielski"
    K_ORE = "kore"
    C6_EXPANSION = "c6exp"
    INDICATOR_COMPOSE = "indicator"


@dataclass(frozen=True)
class NamedGraphSpec:
    family: Family
    params: dict[str, Any] = field(default_factory=dict)

    def build(self, base: Graph | None = None) -> Graph:
        p = self.params
        f = self.family
        if f is Family.COMPLETE:
            return complete(p["n"])
        if f is Family.CYCLE:
            return cycle(p["n"])
        if f is Family.PATH:
            return path(p["n"])
        if f is Family.WHEEL:
            return wheel(p["n"])
        if f is Family.MOSER_SPINDLE:
            return moser_spindle()
        if f is Family.K_ORE:
            return k_ore_family(p.get("k", 4), p.get("steps", 1), p.get("seed", 0))[-1]
        if base is None:
            raise ValueError(f"{f.value} needs an input graph")
        if f is Family.MYCIELSKI:
            return mycielski(base)
        if f is Family.C6_EXPANSION:
            return c6_expansion(base, p["vertex"])
        if f is Family.INDICATOR_COMPOSE:
            return indicator_compose(base, p.get("path_len", 4))
        raise ValueError(f"unknown family {f}")


@dataclass
class CorpusEntry:
    """A corpus graph with the properties it is expected to have."""

    name: str
    graph: Graph
    tags: dict[str, Any]


def _degree3_vertex(g: Graph, rng: random.Random | None = None) -> int:
    cands = [v for v in range(g.n) if g.adj[v].bit_count() == 3]
    return rng.choice(cands) if rng else cands[0]


def corpus_generate(seed: int = 1, budget: int = 20) -> list[CorpusEntry]:
    """The default corpus of graphs with at most ``budget`` vertices.

    Tags: ``four_critical`` and ``no_72`` (no (7,2)-colouring) as expected
    from the constructions, ``odd_wheel`` where applicable.
    """
    rng = random.Random(seed)
    out: list[CorpusEntry] = []

    def add(name: str, g: Graph, **tags: Any) -> None:
        if g.n <= budget:
            out.append(CorpusEntry(name, g, tags))

    add("K4", complete(4), four_critical=True, no_72=True, odd_wheel=True)
    for n in range(6, 13, 2):
        add(f"W{n}", wheel(n), four_critical=True, no_72=True, odd_wheel=True)
    add("moser", moser_spindle(), four_critical=True, no_72=False, odd_wheel=False)
    add("grotzsch", mycielski(cycle(5)), four_critical=True, no_72=True, odd_wheel=False)

    bases = {"K4": complete(4)} | {f"W{n}": wheel(n) for n in (6, 8, 10)}
    for name, g in bases.items():
        # expand a rim vertex (vertex 0 has degree 3 in every wheel and in K4)
        add(f"c6({name})", c6_expansion(g, 0), four_critical=True, no_72=True, odd_wheel=False)

    # iterated expansions, depth <= 3, at seeded degree-3 vertices
    g = complete(4)
    name = "K4"
    for depth in range(1, 4):
        g = c6_expansion(g, _degree3_vertex(g, rng))
        name = f"c6^{depth}(K4)"
        if depth > 1:
            add(name, g, four_critical=True, no_72=True, odd_wheel=False)
    g = c6_expansion(wheel(6), 0)
    add("c6^2(W6)", c6_expansion(g, _degree3_vertex(g, rng)), four_critical=True, no_72=True, odd_wheel=False)

    for i, h in enumerate(k_ore_family(4, 3, seed)[1:], 1):
        if h.n <= 13:
            add(f"4ore[{seed}:{i}]", h, four_critical=True, no_72=False, odd_wheel=False, k_ore=True)
    return out
