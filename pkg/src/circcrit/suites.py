"""Verification suites over a graph corpus, with deterministic JSON reports."""
from __future__ import annotations

import json
import random
import signal
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator

from . import constructions as C
from .circular import (
    circular_chromatic_number,
    count_colourings_oracle,
    find_colouring,
    is_valid_colouring,
    reduce_nonsurjective,
)
from .critical import is_h_critical, is_k_critical, min_degree_and_edge_connectivity_check
from .density import (
    discharging_audit,
    evaluate_bounds,
    is_exception,
    kostochka_yancey_bound,
    main_bound,
)
from .formats import read_graph_file, to_graph6
from .gallai import (
    audit_alternating_path,
    audit_no_kminus1_clique,
    audit_path3_structure,
    audit_structure_theorem,
    blocks_are_cliques_or_odd_cycles,
    gallai_tree,
)
from .graph import Graph, complement, has_hamiltonian_cycle, is_isomorphic
from . import lists as Lst

SCHEMA = 1
GRAPH_SUFFIXES = (".g6", ".s6", ".edges")
ORACLE_TARGETS = ((3, 1), (5, 2), (7, 2), (7, 3), (4, 1))


class SuiteError(ValueError):
    pass


@dataclass
class Facts:
    """What the solver says about a corpus graph, computed once per graph."""

    four_critical: bool
    has_72: bool

    @property
    def certified(self) -> bool:
        return self.four_critical and not self.has_72


@dataclass
class Item:
    name: str
    graph: Graph
    tags: dict[str, Any]
    facts: Facts


@dataclass
class CheckRecord:
    check: str
    graph: str
    verdict: bool
    witness: Any = None
    witness_path: str | None = None
    seconds: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {"check": self.check, "graph": self.graph, "verdict": self.verdict, "witness": self.witness}
        if self.witness_path:
            out["witness_path"] = self.witness_path
        if timings:
            out["seconds"] = round(self.seconds, 6)
        return out


@dataclass
class SuiteResult:
    suite: str
    seed: int
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.verdict for r in self.records)

    @property
    def failed(self) -> int:
        return len(self.records) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self, timings: bool = False) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "seed": self.seed,
            "summary": {"checks": len(self.records), "passed": self.passed, "failed": self.failed},
            "records": [r.to_json(timings) for r in self.records],
        }

    def table(self) -> str:
        width = max([len(r.check) for r in self.records] + [5])
        gw = max([len(r.graph) for r in self.records] + [5])
        lines = [f"{'check':<{width}}  {'graph':<{gw}}  result"]
        for r in self.records:
            lines.append(f"{r.check:<{width}}  {r.graph:<{gw}}  {'PASS' if r.verdict else 'FAIL'}")
        lines.append(f"{self.passed}/{len(self.records)} passed")
        return "\n".join(lines)


def _json_safe(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_json_safe(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _json_safe(v) for k, v in x.items()}
    return x


# --- corpus loading -----------------------------------------------------------------


def compute_facts(g: Graph) -> Facts:
    return Facts(is_k_critical(g, 4).is_critical, find_colouring(g, (7, 2)) is not None)


def builtin_items(seed: int = 1, budget: int = 20) -> list[Item]:
    return [Item(e.name, e.graph, e.tags, compute_facts(e.graph)) for e in C.corpus_generate(seed, budget)]


def load_corpus_dir(path: str | Path) -> list[Item]:
    root = Path(path)
    if not root.is_dir():
        raise SuiteError(f"corpus directory {root} does not exist")
    manifest: dict[str, Any] = {}
    mf = root / "manifest.json"
    if mf.exists():
        manifest = json.loads(mf.read_text()).get("graphs", {})
    items = []
    for f in sorted(p for p in root.iterdir() if p.suffix in GRAPH_SUFFIXES):
        graphs = read_graph_file(f)
        for i, g in enumerate(graphs):
            name = f.stem if len(graphs) == 1 else f"{f.stem}#{i}"
            tags = manifest.get(f.name, {}).get("tags", {}) if len(graphs) == 1 else {}
            items.append(Item(name, g, tags, compute_facts(g)))
    return items


def write_corpus_dir(path: str | Path, seed: int = 1, budget: int = 20) -> Path:
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)
    entries = {}
    for e in C.corpus_generate(seed, budget):
        fname = _safe_name(e.name) + ".g6"
        (root / fname).write_text(to_graph6(e.graph) + "\n")
        entries[fname] = {"name": e.name, "v": e.graph.n, "e": e.graph.e, "tags": e.tags}
    (root / "manifest.json").write_text(json.dumps({"schema": SCHEMA, "seed": seed, "graphs": entries}, indent=2, sort_keys=True) + "\n")
    return root


def _safe_name(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_" else "_" for ch in name)


# --- per-graph checks ------------------------------------------------------------------

Check = Callable[[Item], tuple[bool, Any]]
Applies = Callable[[Item], bool]


def _chk_no72_tag(it: Item) -> tuple[bool, Any]:
    col = find_colouring(it.graph, (7, 2))
    if col is not None and not is_valid_colouring(it.graph, col):
        return False, col
    return (col is None) == bool(it.tags["no_72"]), col


def _chk_four_critical_tag(it: Item) -> tuple[bool, Any]:
    v = is_k_critical(it.graph, 4)
    return v.is_critical == bool(it.tags["four_critical"]), v


def _chk_h_critical(it: Item) -> tuple[bool, Any]:
    v = is_h_critical(it.graph, (7, 2))
    return v.is_critical, v


def _chk_connectivity(it: Item) -> tuple[bool, Any]:
    return min_degree_and_edge_connectivity_check(it.graph, 4), None


def _chk_ky(it: Item) -> tuple[bool, Any]:
    g = it.graph
    bound = kostochka_yancey_bound(4, g.n)
    ok = g.e >= bound
    if it.tags.get("k_ore"):
        ok = ok and g.e == bound
    return ok, {"e": g.e, "bound": bound}


def _chk_ham(it: Item) -> tuple[bool, Any]:
    return has_hamiltonian_cycle(complement(it.graph)), None


def _chk_surjective(it: Item) -> tuple[bool, Any]:
    col = find_colouring(it.graph, (7, 2))
    if col is None or not col.is_surjective():
        return False, col
    return True, col


def _chk_chi_c_exceptional(it: Item) -> tuple[bool, Any]:
    x = circular_chromatic_number(it.graph)
    return x == 4, x


def _chk_gallai_blocks(it: Item) -> tuple[bool, Any]:
    r = gallai_tree(it.graph, 4)
    return blocks_are_cliques_or_odd_cycles(it.graph, r), [list(b) for b in r.blocks.blocks]


def _chk_structure(it: Item) -> tuple[bool, Any]:
    return audit_structure_theorem(it.graph, certified=True), [s.value for s in gallai_tree(it.graph, 4).shapes()]


def _chk_no_triangle(it: Item) -> tuple[bool, Any]:
    return audit_no_kminus1_clique(it.graph, 4, certified=True), None


def _chk_path3(it: Item) -> tuple[bool, Any]:
    return audit_path3_structure(it.graph, certified=True), None


def _chk_alternating(it: Item) -> tuple[bool, Any]:
    return audit_alternating_path(it.graph, certified=True), None


def _chk_main(it: Item) -> tuple[bool, Any]:
    rep = evaluate_bounds(it.graph, it.name)
    return is_exception(it.graph) or rep.satisfies["main"], rep


def _chk_exception_sub_bound(it: Item) -> tuple[bool, Any]:
    # K4 and W6 sit strictly below 17v/10
    g = it.graph
    return g.e < main_bound(g.n), {"e": g.e, "bound": main_bound(g.n)}


def _chk_conservation(it: Item) -> tuple[bool, Any]:
    led = discharging_audit(it.graph)
    return led.conserved and sum(led.final) == 2 * it.graph.e, None


def _chk_safe(it: Item) -> tuple[bool, Any]:
    led = discharging_audit(it.graph)
    return led.all_safe, [c.safe for c in led.components]


def _is_k4(it: Item) -> bool:
    return it.graph.n == 4 and it.graph.e == 6


GRAPH_CHECKS: dict[str, list[tuple[str, Applies, Check]]] = {
    "colouring": [
        ("colouring.no72_matches_tag", lambda it: "no_72" in it.tags, _chk_no72_tag),
        ("colouring.surjective_if_critical", lambda it: it.facts.four_critical and it.facts.has_72, _chk_surjective),
        ("colouring.chi_c_of_exceptions", lambda it: is_exception(it.graph) if it.graph.n <= 16 else False, _chk_chi_c_exceptional),
    ],
    "criticality": [
        ("criticality.four_critical_matches_tag", lambda it: "four_critical" in it.tags, _chk_four_critical_tag),
        ("criticality.h_critical_72", lambda it: it.facts.certified, _chk_h_critical),
        ("criticality.edge_connectivity", lambda it: it.facts.four_critical, _chk_connectivity),
        ("criticality.kostochka_yancey", lambda it: it.facts.four_critical, _chk_ky),
        ("criticality.complement_hamiltonian", lambda it: it.facts.four_critical and it.facts.has_72, _chk_ham),
    ],
    "gallai": [
        ("gallai.blocks", lambda it: it.facts.four_critical, _chk_gallai_blocks),
        ("gallai.structure_theorem", lambda it: it.facts.certified, _chk_structure),
        ("gallai.no_triangle", lambda it: it.facts.certified and not _is_k4(it), _chk_no_triangle),
        ("gallai.path3", lambda it: it.facts.certified, _chk_path3),
        ("gallai.alternating_path", lambda it: it.facts.certified, _chk_alternating),
    ],
    "density": [
        ("density.main_theorem", lambda it: it.facts.certified, _chk_main),
        ("density.exceptions_below_bound", lambda it: it.facts.certified and is_exception(it.graph), _chk_exception_sub_bound),
        ("density.conservation", lambda it: True, _chk_conservation),
        ("density.components_safe", lambda it: it.facts.certified and not is_exception(it.graph), _chk_safe),
    ],
}
GRAPH_CHECKS["structure"] = GRAPH_CHECKS["gallai"]


# --- global checks (not tied to one corpus graph) ---------------------------------------

GlobalCheck = Callable[[int], tuple[bool, Any]]


def _lemma_odd_cycles_exhaustive(seed: int) -> tuple[bool, Any]:
    res = {n: Lst.exhaustive_odd_cycle_check(n) for n in (5, 7)}
    return all(bad == 0 for _, bad in res.values()), {str(n): list(v) for n, v in res.items()}


def _lemma_odd_cycles_random(seed: int) -> tuple[bool, Any]:
    rng = random.Random(seed)
    out = {}
    for n in (9, 11):
        g = C.cycle(n)
        good = all(Lst.solve_list(g, (7, 2), Lst.random_interval_assignment(n, rng, non_uniform=True)) for _ in range(500))
        uniform_blocked = all(Lst.solve_list(g, (7, 2), L) is None for L in Lst.uniform_interval_assignments(n))
        out[str(n)] = good and uniform_blocked
    return all(out.values()), out


def _lemma_p3_counterexample(seed: int) -> tuple[bool, Any]:
    L = Lst.ListAssignment.of(7, [{0, 1}, {5, 6, 0, 1}, {5, 6}])
    return Lst.solve_list(C.path(3), (7, 2), L) is None, L.to_json()


def _lemma_paths_random(seed: int) -> tuple[bool, Any]:
    rng = random.Random(seed)
    for _ in range(1000):
        n = rng.randint(1, 9)
        L = Lst.random_interval_assignment(n, rng)
        lists = list(L.lists)
        lists[0] = frozenset([rng.randrange(7)])
        if not Lst.check_path_precoloured(n, Lst.ListAssignment(7, tuple(lists))):
            return False, [sorted(x) for x in lists]
    for _ in range(1000):
        n = rng.randint(1, 9)
        L = Lst.random_interval_assignment(n, rng)
        lists = list(L.lists)
        a, b = (2, 3) if rng.random() < 0.5 else (3, 2)
        if n == 1:
            a = rng.randint(2, 4)
        s = rng.randrange(7)
        lists[0] = Lst.interval(s, (s + a - 1) % 7)
        if n > 1:
            s = rng.randrange(7)
            lists[-1] = Lst.interval(s, (s + b - 1) % 7)
        if not Lst.check_path_endpoints_2_3(n, Lst.ListAssignment(7, tuple(lists))):
            return False, [sorted(x) for x in lists]
    return True, None


def _lemma_near_uniform(seed: int) -> tuple[bool, Any]:
    res = {str(k): Lst.check_near_uniform_clique(k) for k in (4, 5, 6)}
    return all(res.values()), res


def _lemma_clique_lists(seed: int) -> tuple[bool, Any]:
    exhaustive = {str(k): list(Lst.exhaustive_clique_check(k)) for k in (2, 3)}
    rng = random.Random(seed)
    k = 4
    bad = 0
    for _ in range(1000):
        universe = list(range(2 * k))
        if rng.random() < 0.1:
            base = frozenset(rng.sample(universe, k))
            lists = [base] * (k + 1)
        else:
            lists = [frozenset(rng.sample(universe, k)) for _ in range(k + 1)]
        L = Lst.ListAssignment(2 * k, tuple(lists))
        if Lst.check_clique_klists(k, L) == L.is_uniform():
            bad += 1
    ok = bad == 0 and all(b == 0 for _, b in exhaustive.values())
    return ok, {"exhaustive": exhaustive, "random_mismatches": bad}


def _indicator_equivalence(seed: int) -> tuple[bool, Any]:
    out = {}
    graphs = {
        "K4": C.complete(4),
        "C5": C.cycle(5),
        "moser": C.moser_spindle(),
        "W6": C.wheel(6),
        "c6(K4)": C.c6_expansion(C.complete(4), 0),
    }
    for name, g in graphs.items():
        h = C.indicator_compose(g, 4)
        same = (find_colouring(g, (7, 2)) is None) == (find_colouring(h, (7, 3)) is None)
        counts = h.e == 3 * g.e and h.n == 2 * g.e + g.n
        out[name] = same and counts
    return all(out.values()), out


def _c6_preservation(seed: int) -> tuple[bool, Any]:
    out = {}
    bases = {"K4": C.complete(4), "W6": C.wheel(6), "W8": C.wheel(8), "W10": C.wheel(10)}
    bases["c6(K4)"] = C.c6_expansion(C.complete(4), 0)
    for name, h in bases.items():
        v = next(u for u in range(h.n) if h.adj[u].bit_count() == 3)
        g = C.c6_expansion(h, v)
        counts = (g.n, g.e) == (h.n + 3, h.e + 6)
        out[name] = counts and is_k_critical(g, 4).is_critical and find_colouring(g, (7, 2)) is None
    return all(out.values()), out


def _moser_claims(seed: int) -> tuple[bool, Any]:
    m = C.moser_spindle()
    chi_c = circular_chromatic_number(m)
    col = find_colouring(m, (7, 2))
    facts = {
        "four_critical": is_k_critical(m, 4).is_critical,
        "no_3_colouring": find_colouring(m, (3, 1)) is None,
        "has_72": col is not None and is_valid_colouring(m, col),
        "chi_c": chi_c == Fraction(7, 2),
        "ky_equality": m.e == 11 == kostochka_yancey_bound(4, 7),
        "sharpness": Fraction(m.e) < Fraction(169, 15) == Fraction(27 * 7 - 20, 15),
        "ore_compose": is_isomorphic(C.ore_compose(C.complete(4), (0, 1), C.complete(4), 0, ([1], [2, 3])), m),
    }
    return all(facts.values()), facts


def _wheels(seed: int) -> tuple[bool, Any]:
    out = {}
    for n in range(4, 13):
        g = C.wheel(n)
        if n % 2 == 0:
            out[f"W{n}"] = (
                circular_chromatic_number(g) == 4
                and is_k_critical(g, 4).is_critical
                and find_colouring(g, (7, 2)) is None
            )
        else:
            out[f"W{n}"] = find_colouring(g, (3, 1)) is not None and find_colouring(g, (2, 1)) is None
    return all(out.values()), out


def _nonsurjective_reduction(seed: int) -> tuple[bool, Any]:
    rng = random.Random(seed)
    for _ in range(100):
        n = rng.randint(1, 8)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        col = find_colouring(g, (7, 2))
        if col is None or col.is_surjective():
            continue
        red = reduce_nonsurjective(g, col)
        if not is_valid_colouring(g, red) or (red.target.p, red.target.q) != (3, 1):
            return False, {"graph": to_graph6(g), "colouring": col.to_json()}
    return True, None


def random_small_graph(rng: random.Random, max_n: int = 8) -> Graph:
    n = rng.randint(1, max_n)
    p = rng.random()
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def oracle_cases(seed: int, count: int = 200) -> list[Graph]:
    rng = random.Random(seed)
    return [random_small_graph(rng) for _ in range(count)]


def _oracle_equivalence(seed: int) -> tuple[bool, Any]:
    mismatches = []
    for i, g in enumerate(oracle_cases(seed)):
        for t in ORACLE_TARGETS:
            col = find_colouring(g, t)
            if col is not None and not is_valid_colouring(g, col):
                mismatches.append([i, list(t), "invalid"])
            elif (col is not None) != (count_colourings_oracle(g, t) > 0):
                mismatches.append([i, list(t), to_graph6(g)])
    return not mismatches, mismatches


GLOBAL_CHECKS: dict[str, list[tuple[str, GlobalCheck]]] = {
    "lemmas": [
        ("lemmas.moser_spindle", _moser_claims),
        ("lemmas.wheels", _wheels),
        ("lemmas.c6_expansion_preserves", _c6_preservation),
        ("lemmas.indicator_equivalence", _indicator_equivalence),
        ("lemmas.odd_cycle_lists_exhaustive", _lemma_odd_cycles_exhaustive),
        ("lemmas.odd_cycle_lists_random", _lemma_odd_cycles_random),
        ("lemmas.p3_counterexample", _lemma_p3_counterexample),
        ("lemmas.path_lists_random", _lemma_paths_random),
        ("lemmas.near_uniform_cliques", _lemma_near_uniform),
        ("lemmas.clique_k_lists", _lemma_clique_lists),
        ("lemmas.nonsurjective_reduction", _nonsurjective_reduction),
    ],
    "oracle-equivalence": [("oracle.find_vs_count", _oracle_equivalence)],
}

SUITES: dict[str, tuple[list[str], list[str]]] = {
    "colouring": (["colouring"], []),
    "criticality": (["criticality"], []),
    "gallai": (["gallai"], []),
    "structure": (["structure"], []),
    "density": (["density"], []),
    "lemmas": ([], ["lemmas"]),
    "oracle-equivalence": ([], ["oracle-equivalence"]),
    "paper-claims": (["colouring", "criticality", "gallai", "density"], ["lemmas"]),
}


# --- runner -----------------------------------------------------------------------------


class CheckTimeout(Exception):
    pass


@contextmanager
def _time_limit(seconds: float | None) -> Iterator[None]:
    if not seconds:
        yield
        return

    def fire(signum: int, frame: Any) -> None:
        raise CheckTimeout

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _run_task(task: tuple) -> CheckRecord:
    kind, check_id, payload, seed, limit = task
    start = time.perf_counter()
    try:
        with _time_limit(limit):
            if kind == "graph":
                group, idx, item = payload
                fn = dict((c, f) for c, _, f in GRAPH_CHECKS[group])[check_id]
                verdict, witness = fn(item)
                name = item.name
            else:
                group = payload
                fn = dict(GLOBAL_CHECKS[group])[check_id]
                verdict, witness = fn(seed)
                name = "-"
    except CheckTimeout:
        verdict, witness = False, "timeout"
        name = payload[2].name if kind == "graph" else "-"
    return CheckRecord(check_id, name, bool(verdict), _json_safe(witness), seconds=time.perf_counter() - start)


def run_suite(
    name: str,
    corpus: str | Path | list[Item] = "builtin",
    seed: int = 1,
    jobs: int = 1,
    time_limit: float | None = None,
) -> SuiteResult:
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    groups, global_groups = SUITES[name]
    if isinstance(corpus, list):
        items = corpus
    elif str(corpus) == "builtin":
        items = builtin_items(seed) if groups else []
    else:
        items = load_corpus_dir(corpus)
    tasks = []
    for group in groups:
        for check_id, applies, _ in GRAPH_CHECKS[group]:
            for idx, it in enumerate(items):
                if applies(it):
                    tasks.append(("graph", check_id, (group, idx, it), seed, time_limit))
    for group in global_groups:
        for check_id, _ in GLOBAL_CHECKS[group]:
            tasks.append(("global", check_id, group, seed, time_limit))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_task, tasks))
    else:
        records = [_run_task(t) for t in tasks]
    records.sort(key=lambda r: (r.check, r.graph))
    return SuiteResult(name, seed, records)
