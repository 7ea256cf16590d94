"""Circular cliques and exact (p,q)-colouring.

A (p,q)-colouring of ``g`` is a map ``f: V -> {0..p-1}`` with
``q <= |f(u) - f(v)| <= p - q`` on every edge, i.e. a homomorphism into the
circular clique ``G_{p,q}``. Colour sets are handled as bitmasks over
``0..p-1`` throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import Graph, components, delete_vertices, iter_bits, max_clique_size

ORACLE_BIT_LIMIT = 30


class TargetError(ValueError):
    pass


class OracleTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CircularTarget:
    """A reduced pair (p, q) with p/q >= 2."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p <= 0 or self.q <= 0:
            raise TargetError(f"({self.p},{self.q}): p and q must be positive")
        d = math.gcd(self.p, self.q)
        if d != 1:
            object.__setattr__(self, "p", self.p // d)
            object.__setattr__(self, "q", self.q // d)
        if self.p < 2 * self.q:
            raise TargetError(f"({self.p},{self.q}): need p/q >= 2")

    @classmethod
    def parse(cls, text: str) -> CircularTarget:
        for sep in ("/", ",", ":"):
            if sep in text:
                a, b = text.split(sep)
                return cls(int(a), int(b))
        return cls(int(text), 1)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.p, self.q)

    def adjacent(self, a: int, b: int) -> bool:
        return self.q <= abs(a - b) <= self.p - self.q

    def neighbour_mask(self, c: int) -> int:
        return _neighbour_masks(self.p, self.q)[c]

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


_MASK_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def _neighbour_masks(p: int, q: int) -> tuple[int, ...]:
    key = (p, q)
    if key not in _MASK_CACHE:
        _MASK_CACHE[key] = tuple(
            sum(1 << d for d in range(p) if q <= abs(c - d) <= p - q) for c in range(p)
        )
    return _MASK_CACHE[key]


def as_target(t: CircularTarget | tuple[int, int]) -> CircularTarget:
    return t if isinstance(t, CircularTarget) else CircularTarget(*t)


@dataclass(frozen=True)
class Colouring:
    target: CircularTarget
    assignment: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def colour_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self.target.p)]
        for v, c in enumerate(self.assignment):
            classes[c].append(v)
        return classes

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == self.target.p

    def to_json(self) -> dict:
        return {"p": self.target.p, "q": self.target.q, "assignment": list(self.assignment)}

    @classmethod
    def from_json(cls, data: Mapping) -> Colouring:
        return cls(CircularTarget(data["p"], data["q"]), tuple(data["assignment"]))


def coloured_neighbours(g: Graph, colouring: Colouring, vertices: Iterable[int], t: int) -> list[int]:
    """Vertices outside ``vertices`` adjacent to it and coloured ``t``."""
    inside = set(vertices)
    out = set()
    for v in inside:
        for u in iter_bits(g.adj[v]):
            if u not in inside and colouring[u] == t:
                out.add(u)
    return sorted(out)


def circular_clique(t: CircularTarget | tuple[int, int]) -> Graph:
    t = as_target(t)
    return Graph(t.p, _neighbour_masks(t.p, t.q))


def is_valid_colouring(g: Graph, c: Colouring) -> bool:
    if len(c.assignment) != g.n:
        return False
    p = c.target.p
    if any(not 0 <= x < p for x in c.assignment):
        return False
    return all(c.target.adjacent(c[u], c[v]) for u, v in g.edges())


# --- availability intervals -------------------------------------------------


def cyclic_interval(mask: int, p: int) -> tuple[int, int] | None:
    """``(lo, hi)`` if ``mask`` is a proper non-empty cyclic interval mod p."""
    full = (1 << p) - 1
    if mask == 0 or mask == full:
        return None
    for lo in iter_bits(mask):
        if not mask >> ((lo - 1) % p) & 1:
            break
    size = mask.bit_count()
    if all(mask >> ((lo + i) % p) & 1 for i in range(size)):
        return lo, (lo + size - 1) % p
    return None


def interval_mask(lo: int, hi: int, p: int) -> int:
    """Mask of the cyclic interval ``[lo, hi]`` mod p."""
    size = (hi - lo) % p + 1
    return sum(1 << ((lo + i) % p) for i in range(size))


@dataclass(frozen=True)
class AvailabilityInterval:
    """The set of colours still open to a vertex, with its cyclic-interval shape."""

    p: int
    mask: int

    @property
    def kind(self) -> str:
        if self.mask == 0:
            return "empty"
        if self.mask == (1 << self.p) - 1:
            return "full"
        return "interval" if cyclic_interval(self.mask, self.p) else "set"

    @property
    def bounds(self) -> tuple[int, int] | None:
        return cyclic_interval(self.mask, self.p)

    @property
    def colours(self) -> list[int]:
        return list(iter_bits(self.mask))

    def is_interval_like(self) -> bool:
        return self.kind != "set"

    def __contains__(self, c: int) -> bool:
        return bool(self.mask >> c & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()


def available_colours(
    g: Graph,
    partial: Mapping[int, int] | Sequence[int | None],
    v: int,
    t: CircularTarget | tuple[int, int],
) -> AvailabilityInterval:
    t = as_target(t)
    g._check(v)
    lookup = partial if isinstance(partial, Mapping) else dict(
        (u, c) for u, c in enumerate(partial) if c is not None
    )
    if v in lookup:
        raise ValueError(f"vertex {v} is already coloured")
    masks = _neighbour_masks(t.p, t.q)
    avail = t.full_mask
    for u in iter_bits(g.adj[v]):
        c = lookup.get(u)
        if c is not None:
            avail &= masks[c]
    return AvailabilityInterval(t.p, avail)


def colour_order(mask: int, p: int) -> list[int]:
    """Colours of ``mask`` from the low end of its cyclic interval, else ascending."""
    span = cyclic_interval(mask, p)
    if span is None:
        return list(iter_bits(mask))
    lo, _ = span
    return [(lo + i) % p for i in range(mask.bit_count())]


# --- exact search -------------------------------------------------------------


def _search(g: Graph, p: int, q: int, domains: list[int], pin_first: bool) -> list[int] | None:
    """Backtracking with forward checking over per-vertex colour masks.

    Vertex choice: smallest domain, ties to the lowest index. With
    ``pin_first`` the first vertex picked in each component is coloured 0,
    which is sound when every domain is full because G_{p,q} is
    vertex-transitive.
    """
    masks = _neighbour_masks(p, q)
    colour = [-1] * g.n
    adj = g.adj
    for comp in components(g):
        dom = {v: domains[v] for v in comp}
        if any(m == 0 for m in dom.values()):
            return None
        left = set(comp)
        first = [pin_first]

        def solve() -> bool:
            if not left:
                return True
            v = min(left, key=lambda u: (dom[u].bit_count(), u))
            choices = colour_order(dom[v], p)
            if first[0]:
                first[0] = False
                choices = [0]
            left.discard(v)
            for c in choices:
                colour[v] = c
                saved = []
                ok = True
                for u in iter_bits(adj[v]):
                    if u in left:
                        new = dom[u] & masks[c]
                        if new != dom[u]:
                            saved.append((u, dom[u]))
                            dom[u] = new
                            if not new:
                                ok = False
                                break
                if ok and solve():
                    return True
                for u, m in saved:
                    dom[u] = m
            colour[v] = -1
            left.add(v)
            return False

        if not solve():
            return None
    return colour


def find_colouring(g: Graph, t: CircularTarget | tuple[int, int]) -> Colouring | None:
    """A (p,q)-colouring of ``g`` if one exists, else None. Exact and deterministic."""
    t = as_target(t)
    found = _search(g, t.p, t.q, [t.full_mask] * g.n, pin_first=True)
    return None if found is None else Colouring(t, tuple(found))


def find_list_colouring(g: Graph, t: CircularTarget | tuple[int, int], lists: Sequence[Iterable[int]]) -> Colouring | None:
    t = as_target(t)
    if len(lists) != g.n:
        raise ValueError("need one list per vertex")
    domains = []
    for lst in lists:
        m = 0
        for c in lst:
            if not 0 <= c < t.p:
                raise ValueError(f"colour {c} outside 0..{t.p - 1}")
            m |= 1 << c
        domains.append(m)
    found = _search(g, t.p, t.q, domains, pin_first=False)
    return None if found is None else Colouring(t, tuple(found))


def count_colourings_oracle(g: Graph, t: CircularTarget | tuple[int, int]) -> int:
    """Count all valid total assignments by exhaustive enumeration.

    Each edge contributes a p x p compatibility table broadcast over the full
    assignment tensor; nothing is pruned.
    """
    t = as_target(t)
    p, n = t.p, g.n
    if n * math.log2(p) > ORACLE_BIT_LIMIT:
        raise OracleTooLarge(f"{p}^{n} assignments exceed the oracle limit of 2^{ORACLE_BIT_LIMIT}")
    if n == 0:
        return 1
    ok = np.array([[t.adjacent(a, b) for b in range(p)] for a in range(p)])
    # enumerate the leading axes explicitly so each tensor stays small
    lead = 0
    while n - lead > 1 and p ** (n - lead) > 1 << 22:
        lead += 1
    rest = n - lead
    total = 0
    for prefix in np.ndindex(*(p,) * lead):
        valid = np.ones((p,) * rest, dtype=bool)
        for u, v in g.edges():
            if v < lead:
                if not ok[prefix[u], prefix[v]]:
                    valid[...] = False
                continue
            shape = [1] * rest
            if u < lead:
                shape[v - lead] = p
                valid &= ok[prefix[u]].reshape(shape)
            else:
                shape[u - lead] = p
                shape[v - lead] = p
                valid &= ok.reshape(shape)
        total += int(valid.sum())
    return total


# --- lower parents and chi_c --------------------------------------------------


def lower_parents(t: CircularTarget | tuple[int, int]) -> CircularTarget:
    """The pair (p', q') with p' < p and p*q' - p'*q = 1."""
    t = as_target(t)
    p, q = t.p, t.q
    for q2 in range(1, q + 1):
        num = p * q2 - 1
        if num % q == 0:
            p2 = num // q
            if 0 < p2 < p and p2 >= 2 * q2:
                return CircularTarget(p2, q2)
    raise TargetError(f"({p},{q}) has no lower parents")


def reduce_nonsurjective(g: Graph, c: Colouring) -> Colouring:
    """Turn a non-surjective (p,q)-colouring into a (p',q')-colouring for the lower parents."""
    t = c.target
    if not is_valid_colouring(g, c):
        raise ValueError("input is not a valid colouring")
    missing = sorted(set(range(t.p)) - set(c.assignment))
    if not missing:
        raise ValueError("colouring is surjective")
    parent = lower_parents(t)
    punctured, kept = delete_vertices(circular_clique(t), [missing[0]])
    hom = find_colouring(punctured, parent)
    if hom is None:
        raise AssertionError(f"G_{t.p},{t.q} minus a vertex does not map to G_{parent.p},{parent.q}")
    image = {old: hom[new] for new, old in enumerate(kept)}
    return Colouring(parent, tuple(image[x] for x in c.assignment))


def chromatic_number(g: Graph) -> int:
    """Least k with a (k,1)-colouring, deepening upward from a clique bound."""
    if g.n == 0:
        return 0
    if g.e == 0:
        return 1
    k = max(2, max_clique_size(g))
    while find_colouring(g, (k, 1)) is None:
        k += 1
    return k


def fractions_between(lo: Fraction, hi: Fraction, max_p: int) -> list[Fraction]:
    """Reduced fractions p/q in (lo, hi] with p <= max_p and p/q >= 2, ascending."""
    out = set()
    for p in range(2, max_p + 1):
        for q in range(1, p // 2 + 1):
            f = Fraction(p, q)
            if lo < f <= hi and f.numerator == p:
                out.add(f)
    return sorted(out)


def circular_chromatic_number(g: Graph) -> Fraction:
    """Exact chi_c as a Fraction (1 for graphs without edges)."""
    if g.e == 0:
        return Fraction(1)
    k = chromatic_number(g)
    candidates = fractions_between(Fraction(k - 1), Fraction(k), g.n)
    # colourability is upward closed in p/q, so bisect for the first success
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        f = candidates[mid]
        if find_colouring(g, (f.numerator, f.denominator)) is not None:
            hi = mid
        else:
            lo = mid + 1
    return candidates[lo]
