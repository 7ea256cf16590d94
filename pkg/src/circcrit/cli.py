"""Command-line front end: one subcommand per module, JSON on stdout or --out."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import constructions as C
from .circular import CircularTarget, TargetError, circular_chromatic_number, find_colouring
from .critical import is_k_critical, is_h_critical
from .density import discharging_audit, evaluate_bounds, frac_str
from .formats import GraphFormatError, read_graph_file, to_graph6
from .gallai import gallai_tree
from .graph import Graph, GraphError
from .lists import ListAssignment, solve_list
from .suites import SCHEMA, SUITES, SuiteError, run_suite, write_corpus_dir


def default_seed() -> int:
    return int(os.environ.get("CIRCCRIT_SEED", "1"))


def dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(payload: dict, out: str | None) -> None:
    _emit(dump({"schema": SCHEMA, **payload}), out)


def _load(path: str) -> Graph:
    graphs = read_graph_file(path)
    if len(graphs) != 1:
        raise GraphFormatError(f"expected exactly one graph, found {len(graphs)}", 0, source=path)
    return graphs[0]


def cmd_colour(args: argparse.Namespace) -> int:
    g = _load(args.file)
    t = CircularTarget.parse(args.target)
    if args.lists:
        L = ListAssignment.from_json(json.loads(Path(args.lists).read_text()))
        col = solve_list(g, t, L)
    else:
        col = find_colouring(g, t)
    _report(
        {
            "graph": args.file,
            "target": [t.p, t.q],
            "colourable": col is not None,
            "colouring": None if col is None else col.to_json(),
        },
        args.out,
    )
    return 0


def cmd_chi_c(args: argparse.Namespace) -> int:
    g = _load(args.file)
    _report({"graph": args.file, "chi_c": frac_str(circular_chromatic_number(g))}, args.out)
    return 0


def cmd_critical(args: argparse.Namespace) -> int:
    g = _load(args.file)
    payload: dict[str, Any] = {"graph": args.file, "k": args.k, "k_critical": is_k_critical(g, args.k).to_json()}
    if args.target:
        t = CircularTarget.parse(args.target)
        payload["target"] = [t.p, t.q]
        payload["h_critical"] = is_h_critical(g, t).to_json()
    _report(payload, args.out)
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "corpus":
        if not args.out:
            raise SuiteError("construct --family corpus needs --out DIR")
        root = write_corpus_dir(args.out, args.seed, args.budget)
        print(root)
        return 0
    family = C.Family(args.family)
    params: dict[str, Any] = {}
    for key in ("n", "k", "steps", "vertex", "path_len"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if family is C.Family.K_ORE:
        params.setdefault("seed", args.seed)
    base = _load(args.input) if args.input else None
    g = C.NamedGraphSpec(family, params).build(base)
    _emit(to_graph6(g) + "\n", args.out)
    return 0


def cmd_gallai(args: argparse.Namespace) -> int:
    g = _load(args.file)
    _report({"graph": args.file, "report": gallai_tree(g, args.k).to_json()}, args.out)
    return 0


def cmd_density(args: argparse.Namespace) -> int:
    g = _load(args.file)
    _report(evaluate_bounds(g, args.file).to_json(), args.out)
    return 0


def cmd_discharge(args: argparse.Namespace) -> int:
    g = _load(args.file)
    _report({"graph": args.file, "ledger": discharging_audit(g).to_json()}, args.out)
    return 0


def _run(args: argparse.Namespace, name: str, corpus: str, table: bool) -> int:
    res = run_suite(name, corpus, args.seed, args.jobs, args.time_limit)
    if table:
        print(res.table())
        if args.out:
            Path(args.out).write_text(dump(res.to_json(args.timings)))
    else:
        _emit(dump(res.to_json(args.timings)), args.out)
    return res.exit_code


def cmd_audit(args: argparse.Namespace) -> int:
    return _run(args, args.suite, args.corpus, table=True)


def cmd_suite(args: argparse.Namespace) -> int:
    return _run(args, args.name, args.corpus, table=False)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=default_seed(), help="RNG seed (env CIRCCRIT_SEED)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for suites")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--time-limit", type=float, default=None, help="seconds allowed per check")
    common.add_argument("--timings", action="store_true", help="include wall times in suite reports")

    ap = argparse.ArgumentParser(prog="circcrit", description="Circular colouring and criticality toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colour", parents=[common], help="find a (p,q)-colouring or list colouring")
    p.add_argument("file")
    p.add_argument("--target", default="7/2")
    p.add_argument("--lists", help="JSON list assignment {p, lists}")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("chi-c", parents=[common], help="circular chromatic number")
    p.add_argument("file")
    p.set_defaults(func=cmd_chi_c)

    p = sub.add_parser("critical", parents=[common], help="k-criticality and G_{p,q}-criticality")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--target")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("construct", parents=[common], help="build a named graph or the corpus")
    p.add_argument("--family", required=True, choices=[f.value for f in C.Family] + ["corpus"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--vertex", type=int)
    p.add_argument("--path-len", dest="path_len", type=int)
    p.add_argument("--input")
    p.add_argument("--budget", type=int, default=20)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("gallai", parents=[common], help="Gallai tree report")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(func=cmd_gallai)

    p = sub.add_parser("density", parents=[common], help="edge-density bounds")
    p.add_argument("file")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("discharge", parents=[common], help="discharging ledger")
    p.add_argument("file")
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("audit", parents=[common], help="run a suite and print a pass/fail table")
    p.add_argument("corpus", nargs="?", default="builtin")
    p.add_argument("--suite", default="structure", choices=sorted(SUITES))
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("suite", parents=[common], help="run a suite and emit a JSON report")
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--corpus", default="builtin")
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, TargetError, SuiteError, ValueError, OSError) as err:
        print(f"circcrit: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
