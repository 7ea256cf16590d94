"""Small undirected simple graphs with bitmask adjacency.

Vertices are the dense indices ``0..n-1``. Row ``adj[v]`` is an integer whose
bit ``u`` is set iff ``uv`` is an edge. Python integers are unbounded, so the
same representation serves every size we care about; graphs are immutable.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

ISOMORPHISM_LIMIT = 16


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex references."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency rows must match the vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def e(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbours(self, v: int) -> list[int]:
        self._check(v)
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def degree(g: Graph, v: int) -> int:
    g._check(v)
    return g.adj[v].bit_count()


def degree_count(g: Graph, v: int, t: int) -> int:
    """Number of neighbours of ``v`` whose degree is exactly ``t``."""
    g._check(v)
    return sum(1 for u in iter_bits(g.adj[v]) if g.adj[u].bit_count() == t)


def closed_neighbourhood(g: Graph, v: int) -> int:
    g._check(v)
    return g.adj[v] | 1 << v


def set_neighbourhood(g: Graph, vertices: Iterable[int]) -> int:
    """Mask of vertices adjacent to the set but outside it."""
    inside = bits_of(vertices)
    out = 0
    for v in iter_bits(inside):
        out |= g.adj[v]
    return out & ~inside


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph.from_edges(g.n, g.edges() + [tuple(e) for e in edges])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``; returns it with the new->old index list."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check(v)
    index = {v: i for i, v in enumerate(keep)}
    rows = [bits_of(index[u] for u in iter_bits(g.adj[v]) if u in index) for v in keep]
    return Graph(len(keep), tuple(rows)), keep


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    gone = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_edges(g.n + h.n, g.edges() + [(u + shift, v + shift) for u, v in h.edges()])


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by minimum vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def identify_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Merge the vertex set ``s`` into one vertex, dropping loops and parallel edges.

    Vertices outside ``s`` keep their relative order; the merged vertex takes
    the slot of ``min(s)``.
    """
    merged = sorted(set(s))
    if not merged:
        raise GraphError("cannot identify an empty vertex set")
    for v in merged:
        g._check(v)
    rep = merged[0]
    gone = set(merged[1:])
    keep = [v for v in range(g.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    for v in gone:
        index[v] = index[rep]
    edges = {
        (min(index[u], index[v]), max(index[u], index[v]))
        for u, v in g.edges()
        if index[u] != index[v]
    }
    return Graph.from_edges(len(keep), sorted(edges))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation")
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected decomposition (Hopcroft-Tarjan, iterative).

    Bridges form two-vertex blocks and isolated vertices one-vertex blocks.
    Blocks are sorted by their sorted vertex tuples.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            disc[root] = clock
            clock += 1
            found.append((root,))
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter_bits(g.adj[root]))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter_bits(g.adj[u])))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                members = set()
                while True:
                    a, b = edge_stack.pop()
                    members.update((a, b))
                    if (a, b) == (parent, v):
                        break
                found.append(tuple(sorted(members)))
        if root_children > 1:
            cuts.add(root)
    return BlockDecomposition(tuple(sorted(found)), frozenset(cuts))


def has_hamiltonian_cycle(g: Graph) -> bool:
    """Exact backtracking search for a cycle through every vertex."""
    n = g.n
    if n < 3:
        return False
    degs = g.degrees()
    if min(degs) < 2 or not is_connected(g):
        return False
    # vertices of degree 2 force both incident edges
    forced = [0] * n
    for v in range(n):
        if degs[v] == 2:
            for u in iter_bits(g.adj[v]):
                forced[u] |= 1 << v
                forced[v] |= 1 << u
    if any(m.bit_count() > 2 for m in forced):
        return False

    start = min(range(n), key=lambda v: (degs[v], v))
    full = g.vertex_mask

    def extend(v: int, visited: int, count: int) -> bool:
        if count == n:
            return bool(g.adj[v] >> start & 1)
        unvisited = full & ~visited
        # every unvisited vertex still needs two usable neighbours
        ends = 1 << v | 1 << start
        for u in iter_bits(unvisited):
            if (g.adj[u] & (unvisited | ends)).bit_count() < 2:
                return False
        options = g.adj[v] & unvisited
        if count > 1:
            # v already has its predecessor, so at most one forced edge remains
            must = forced[v] & unvisited
            if must.bit_count() > 1:
                return False
            if must:
                options = must
        for u in sorted(iter_bits(options), key=lambda w: (g.adj[w] & unvisited).bit_count()):
            if extend(u, visited | 1 << u, count + 1):
                return True
        return False

    return extend(start, 1 << start, 1)


def _neighbour_degree_signature(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = g.degrees()
    return [(degs[v], tuple(sorted(degs[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or None."""
    if max(g.n, h.n) > ISOMORPHISM_LIMIT:
        raise GraphError(f"isomorphism test limited to {ISOMORPHISM_LIMIT} vertices")
    if g.n != h.n or g.e != h.e or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    sig_g = _neighbour_degree_signature(g)
    sig_h = _neighbour_degree_signature(h)
    if sorted(sig_g) != sorted(sig_h):
        return None
    n = g.n
    # order g's vertices so each one after the first tends to touch earlier ones
    order: list[int] = []
    placed = 0
    while len(order) < n:
        rest = [v for v in range(n) if not placed >> v & 1]
        v = max(rest, key=lambda w: ((g.adj[w] & placed).bit_count(), sig_g[w][0], -w))
        order.append(v)
        placed |= 1 << v
    phi = [-1] * n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or sig_h[w] != sig_g[v]:
                continue
            ok = True
            for u in order[:i]:
                if (g.adj[v] >> u & 1) != (h.adj[w] >> phi[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if place(i + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    return list(phi) if place(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def max_clique_size(g: Graph, vertices: int | None = None) -> int:
    """Exact clique number of the subgraph induced on ``vertices`` (mask)."""
    cand = g.vertex_mask if vertices is None else vertices
    best = 0

    def grow(size: int, pool: int) -> None:
        nonlocal best
        if not pool:
            best = max(best, size)
            return
        if size + pool.bit_count() <= best:
            return
        for v in iter_bits(pool):
            if size + pool.bit_count() <= best:
                return
            grow(size + 1, pool & g.adj[v])
            pool &= ~(1 << v)

    grow(0, cand)
    return best


def has_clique(g: Graph, size: int, vertices: int | None = None) -> bool:
    return max_clique_size(g, vertices) >= size


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.adj[u] >> v & 1 for u, v in combinations(vs, 2))
