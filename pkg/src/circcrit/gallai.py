"""Gallai trees D_{k-1}(G) and executable structure audits for 4-critical graphs."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

from .circular import find_colouring
from .critical import is_k_critical
from .graph import BlockDecomposition, Graph, bits_of, blocks, components, induced_subgraph, is_clique, iter_bits, max_clique_size


class AuditPreconditionError(ValueError):
    pass


class Shape(enum.Enum):
    ISOLATED = "isolated"
    PATH = "path"
    CLAW = "claw"
    ODD_CYCLE = "odd_cycle"
    OTHER = "other"


@dataclass(frozen=True)
class GallaiComponent:
    vertices: tuple[int, ...]
    shape: Shape


@dataclass(frozen=True)
class GallaiReport:
    k: int
    vertices: tuple[int, ...]  # subgraph index -> vertex of G
    subgraph: Graph
    blocks: BlockDecomposition  # in G's labels
    components: tuple[GallaiComponent, ...]
    contains_clique_k_minus_1: bool

    def shapes(self) -> list[Shape]:
        return [c.shape for c in self.components]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "vertices": list(self.vertices),
            "edges": [[self.vertices[u], self.vertices[v]] for u, v in self.subgraph.edges()],
            "blocks": [list(b) for b in self.blocks.blocks],
            "cut_vertices": sorted(self.blocks.cut_vertices),
            "components": [{"vertices": list(c.vertices), "shape": c.shape.value} for c in self.components],
            "contains_clique_k_minus_1": self.contains_clique_k_minus_1,
        }


def classify_shape(g: Graph, vertices: list[int]) -> Shape:
    """Shape of a connected vertex set of ``g`` (induced)."""
    n = len(vertices)
    mask = bits_of(vertices)
    degs = sorted((g.adj[v] & mask).bit_count() for v in vertices)
    edges = sum(degs) // 2
    if n == 1:
        return Shape.ISOLATED
    if edges == n - 1 and degs[-1] <= 2:
        return Shape.PATH
    if n == 4 and degs == [1, 1, 1, 3]:
        return Shape.CLAW
    if edges == n and degs[0] == degs[-1] == 2 and n % 2 == 1:
        return Shape.ODD_CYCLE
    return Shape.OTHER


def gallai_tree(g: Graph, k: int) -> GallaiReport:
    if k < 3:
        raise ValueError("k must be at least 3")
    chosen = [v for v in range(g.n) if g.adj[v].bit_count() == k - 1]
    sub, keep = induced_subgraph(g, chosen)
    local = blocks(sub)
    lifted = BlockDecomposition(
        tuple(sorted(tuple(keep[i] for i in b) for b in local.blocks)),
        frozenset(keep[i] for i in local.cut_vertices),
    )
    comps = tuple(
        GallaiComponent(tuple(keep[i] for i in comp), classify_shape(g, [keep[i] for i in comp]))
        for comp in components(sub)
    )
    has_clique = max_clique_size(sub) >= k - 1 if sub.n else False
    return GallaiReport(k, tuple(keep), sub, lifted, comps, has_clique)


def blocks_are_cliques_or_odd_cycles(g: Graph, report: GallaiReport) -> bool:
    for b in report.blocks.blocks:
        if is_clique(g, b):
            continue
        if classify_shape(g, list(b)) is not Shape.ODD_CYCLE:
            return False
    return True


def is_odd_wheel(g: Graph) -> bool:
    """Hub joined to every vertex of an odd rim cycle (n even, n >= 4)."""
    n = g.n
    if n < 4 or n % 2:
        return False
    full = g.vertex_mask
    for hub in range(n):
        if g.adj[hub] | 1 << hub != full:
            continue
        rim = [v for v in range(n) if v != hub]
        if classify_shape(g, rim) is Shape.ODD_CYCLE or (n == 4 and is_clique(g, rim)):
            return True
    return False


def _is_complete(g: Graph) -> bool:
    return g.e == g.n * (g.n - 1) // 2


def certify_four_critical_no_72(g: Graph) -> bool:
    return find_colouring(g, (7, 2)) is None and is_k_critical(g, 4).is_critical


def _require_certified(g: Graph, certified: bool) -> None:
    if not certified and not certify_four_critical_no_72(g):
        raise AuditPreconditionError("graph is not certified 4-critical without a (7,2)-colouring")


def audit_structure_theorem(g: Graph, certified: bool = False) -> bool:
    """Odd wheel, or every component of D_3 is a path, a claw or a single vertex."""
    _require_certified(g, certified)
    if is_odd_wheel(g):
        return True
    ok = {Shape.PATH, Shape.ISOLATED, Shape.CLAW}
    return all(s in ok for s in gallai_tree(g, 4).shapes())


def audit_no_kminus1_clique(g: Graph, k: int, certified: bool = False) -> bool:
    if not certified:
        if _is_complete(g) and g.n == k:
            raise AuditPreconditionError(f"graph is K_{k}")
        if find_colouring(g, (2 * k - 1, 2)) is not None or not is_k_critical(g, k).is_critical:
            raise AuditPreconditionError(f"graph is not certified {k}-critical without a ({2 * k - 1},2)-colouring")
    return not gallai_tree(g, k).contains_clique_k_minus_1


def _common_witnesses(g: Graph, a: int, b: int, banned: int) -> set[int]:
    out = set(iter_bits(g.adj[a] & g.adj[b] & ~banned))
    if g.adj[a] >> b & 1:
        out.add(b)
    return out


def degree3_paths_of_length2(g: Graph) -> list[tuple[int, int, int]]:
    """Induced paths x-y-z with all three of degree 3 (x < z)."""
    deg3 = [v for v in range(g.n) if g.adj[v].bit_count() == 3]
    d3 = bits_of(deg3)
    out = []
    for y in deg3:
        nb = list(iter_bits(g.adj[y] & d3))
        for i, x in enumerate(nb):
            for z in nb[i + 1 :]:
                if not g.adj[x] >> z & 1:
                    out.append((x, y, z))
    return out


def path3_holds(g: Graph, x: int, y: int, z: int) -> bool:
    """Some labelling of the outside neighbours satisfies the path-of-three structure."""
    xs = list(iter_bits(g.adj[x] & ~(1 << y)))
    (yp,) = iter_bits(g.adj[y] & ~(1 << x | 1 << z))
    zs = list(iter_bits(g.adj[z] & ~(1 << y)))
    banned = 1 << x | 1 << y | 1 << z
    for xp, xpp in permutations(xs):
        for zp, zpp in permutations(zs):
            if xp != zp or xpp == zpp:
                continue
            if not (g.adj[yp] >> xpp & 1 and g.adj[yp] >> zpp & 1):
                continue
            if xp == yp:
                return True
            w1 = _common_witnesses(g, xp, xpp, banned)
            w2 = _common_witnesses(g, xp, zpp, banned)
            if any(a != b for a in w1 for b in w2):
                return True
    return False


def audit_path3_structure(g: Graph, certified: bool = False) -> bool:
    _require_certified(g, certified)
    return all(path3_holds(g, *t) for t in degree3_paths_of_length2(g))


def _ordered_path(g: Graph, vertices: tuple[int, ...]) -> list[int]:
    mask = bits_of(vertices)
    start = min(v for v in vertices if (g.adj[v] & mask).bit_count() <= 1)
    order = [start]
    prev = -1
    while len(order) < len(vertices):
        nxt = [u for u in iter_bits(g.adj[order[-1]] & mask) if u != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def alternating_path_holds(g: Graph, order: list[int]) -> bool:
    """Bipartition-adjacency and witness conclusions for a degree-3 path ``order``."""
    on_path = bits_of(order)
    for seq in (order, order[::-1]):
        v0, v1, vn = seq[0], seq[1], seq[-1]
        ext0 = list(iter_bits(g.adj[v0] & ~on_path))
        extn = list(iter_bits(g.adj[vn] & ~on_path))
        (v1p,) = iter_bits(g.adj[v1] & ~on_path)
        for w, wp in permutations(ext0):
            for t in extn:
                chain = [w] + seq + [t]
                side_b = set(chain[0::2])
                side_a = set(chain[1::2])
                if side_a & side_b:
                    continue
                if not all(g.adj[b] >> v1p & 1 for b in side_b):
                    continue
                if not all(g.adj[a] >> wp & 1 for a in side_a):
                    continue
                if all(
                    p == q or g.adj[p] >> q & 1 or g.adj[p] & g.adj[q] & ~on_path
                    for q in (wp, v1p)
                    for p in (w, t)
                ):
                    return True
    return False


def audit_alternating_path(g: Graph, certified: bool = False) -> bool:
    """Every path component of D_3 with >= 3 vertices passes; vacuous otherwise."""
    _require_certified(g, certified)
    report = gallai_tree(g, 4)
    return all(
        alternating_path_holds(g, _ordered_path(g, c.vertices))
        for c in report.components
        if c.shape is Shape.PATH and len(c.vertices) >= 3
    )
