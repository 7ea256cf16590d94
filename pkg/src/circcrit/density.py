"""Edge-density bounds and the discharging ledger, all in exact rationals."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .constructions import complete, wheel
from .gallai import Shape, certify_four_critical_no_72, gallai_tree
from .graph import Graph, is_isomorphic, iter_bits

THRESHOLD = Fraction(17, 5)


def frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def kostochka_yancey_bound(k: int, v: int) -> int:
    """Least edge count of a k-critical graph on v vertices."""
    if k < 4 or v < k:
        raise ValueError("need k >= 4 and v >= k")
    num = (k + 1) * (k - 2) * v - k * (k - 3)
    den = 2 * (k - 1)
    return -(-num // den)


def main_bound(v: int) -> Fraction:
    return Fraction(17 * v, 10)


def conjectured_bound(v: int) -> Fraction:
    return Fraction(27 * v - 20, 15)


@dataclass(frozen=True)
class BoundReport:
    name: str
    v: int
    e: int
    ky_bound: int | None
    main_bound: Fraction
    conj_bound: Fraction
    satisfies: dict[str, bool]
    ky_equality: bool

    def to_json(self) -> dict:
        return {
            "graph": self.name,
            "v": self.v,
            "e": self.e,
            "ky_bound": self.ky_bound,
            "main_bound": frac_str(self.main_bound),
            "conj_bound": frac_str(self.conj_bound),
            "satisfies": dict(self.satisfies),
            "ky_equality": self.ky_equality,
        }


def evaluate_bounds(g: Graph, name: str = "") -> BoundReport:
    v, e = g.n, g.e
    ky = kostochka_yancey_bound(4, v) if v >= 4 else None
    mb, cb = main_bound(v), conjectured_bound(v)
    sat = {"kostochka_yancey": ky is not None and e >= ky, "main": e >= mb, "conjectured": e >= cb}
    return BoundReport(name, v, e, ky, mb, cb, sat, ky is not None and e == ky)


@dataclass(frozen=True)
class ComponentCharge:
    vertices: tuple[int, ...]
    shape: Shape
    charge: Fraction
    threshold: Fraction

    @property
    def safe(self) -> bool:
        return self.charge >= self.threshold


@dataclass
class ChargeLedger:
    initial: list[int]
    sent: dict[tuple[int, int], Fraction]
    final: list[Fraction]
    components: list[ComponentCharge] = field(default_factory=list)

    @property
    def conserved(self) -> bool:
        return sum(self.final) == sum(self.initial)

    @property
    def all_safe(self) -> bool:
        return all(c.safe for c in self.components)

    def to_json(self) -> dict:
        return {
            "initial": self.initial,
            "sent": [[u, v, frac_str(x)] for (u, v), x in sorted(self.sent.items())],
            "final": [frac_str(x) for x in self.final],
            "total": frac_str(Fraction(sum(self.final))),
            "conserved": self.conserved,
            "components": [
                {
                    "vertices": list(c.vertices),
                    "shape": c.shape.value,
                    "charge": frac_str(c.charge),
                    "threshold": frac_str(c.threshold),
                    "safe": c.safe,
                }
                for c in self.components
            ],
        }


def discharging_audit(g: Graph) -> ChargeLedger:
    """Start with charge deg(v); each vertex of degree >= 4 splits deg(v) - 17/5
    evenly among its degree-3 neighbours (sending nothing if it has none)."""
    degs = g.degrees()
    final = [Fraction(d) for d in degs]
    sent: dict[tuple[int, int], Fraction] = {}
    for v in range(g.n):
        if degs[v] < 4:
            continue
        targets = [u for u in iter_bits(g.adj[v]) if degs[u] == 3]
        if not targets:
            continue
        share = (degs[v] - THRESHOLD) / len(targets)
        for u in targets:
            sent[(v, u)] = share
            final[v] -= share
            final[u] += share
    ledger = ChargeLedger(list(degs), sent, final)
    for comp in gallai_tree(g, 4).components:
        charge = sum((final[v] for v in comp.vertices), Fraction(0))
        ledger.components.append(ComponentCharge(comp.vertices, comp.shape, charge, THRESHOLD * len(comp.vertices)))
    return ledger


def is_exception(g: Graph) -> bool:
    """K4 or W6, the two graphs excluded from the 17v/10 bound."""
    if g.n == 4:
        return is_isomorphic(g, complete(4))
    if g.n == 6:
        return is_isomorphic(g, wheel(6))
    return False


def verify_main_theorem(corpus: Iterable[Graph], certified: bool = False) -> bool:
    """Every certified graph other than K4 and W6 has e >= 17v/10."""
    ok = True
    for g in corpus:
        if not certified and not certify_four_critical_no_72(g):
            raise ValueError("corpus graph is not certified 4-critical without a (7,2)-colouring")
        if not is_exception(g) and g.e < main_bound(g.n):
            ok = False
    return ok
