"""Command-line interface: ``coupled-chroma <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 uncolorable instance or invalid
coloring, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import gc
import json
import statistics
import sys
import time
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import io
from .certificates import CERTIFICATES, CONFIRMED, INCOMPLETE, run_certificate
from .errors import GraphError, ListTooShort, MissingNode, NotASubgraphOfWheel
from .incidence import build_incidence_graph, verify_coupled_coloring
from .plane_graph import (
    PlaneGraph,
    build_cycle,
    build_k4_minus_edge,
    build_prism,
    build_triple_edge,
    build_wheel,
    delete_elements,
    stellate_face,
)
from .solver import Status, default_budget, exact_color
from .wheel import (
    FullWheel,
    LIST_SIZE,
    classify_wheel_subgraph,
    color_wheel,
    color_wheel_subgraph,
    color_wheel_traced,
    random_lists,
    random_wheel_subgraph,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNSAT = 2
EXIT_BUDGET = 3

GEN_KINDS = ("wheel", "cycle", "triple-edge", "prism", "k4-minus-edge", "wheel-subgraph", "graph6")


class InvalidInput(Exception):
    pass


def _ints(text: Optional[str]) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def _need_n(args, minimum: int) -> int:
    if args.n is None or args.n < minimum:
        raise InvalidInput(f"--kind {args.kind} needs --n >= {minimum}")
    return args.n


def generate(args) -> tuple[PlaneGraph, Optional[dict]]:
    kind = args.kind
    host = None
    if kind == "wheel":
        n = _need_n(args, 4)
        g, _ = build_wheel(n)
        host = io.wheel_host(n)
    elif kind == "cycle":
        g = build_cycle(_need_n(args, 3))
    elif kind == "triple-edge":
        g = build_triple_edge()
    elif kind == "prism":
        g = build_prism()
    elif kind == "k4-minus-edge":
        g = build_k4_minus_edge()
    elif kind == "wheel-subgraph":
        n = _need_n(args, 4)
        vs, es = _ints(args.delete_vertices), _ints(args.delete_edges)
        if vs or es:
            g, emb = delete_elements(build_wheel(n)[0], vs, es)
        else:
            g, _, _, emb = random_wheel_subgraph(n, np.random.default_rng(args.seed))
        host = io.wheel_host(n, emb)
    elif kind == "graph6":
        if not args.graph6 or not args.rotations:
            raise InvalidInput("--kind graph6 needs --graph6 and --rotations")
        rot = io.read_json(args.rotations)
        g = io.graph_from_graph6(args.graph6, rot["rotations"], rot.get("outer"))
    else:
        raise InvalidInput(f"unknown kind {kind!r}")
    if args.stellate:
        g = stellate_face(g, g.outer_face)
        host = None
    return g, host


def cmd_gen(args) -> int:
    g, host = generate(args)
    io.write_json(io.graph_to_json(g, host), args.out)
    if args.lists_out:
        rng = np.random.default_rng(args.seed)
        lists = random_lists(g.elements(), args.list_size, args.palette, rng)
        io.write_json(io.lists_to_json(lists), args.lists_out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# color
# ---------------------------------------------------------------------------


def load_graph(path) -> tuple[PlaneGraph, Optional[tuple]]:
    data = io.read_json(path)
    return io.graph_from_json(data), io.host_from_json(data)


def color_graph(g: PlaneGraph, host, lists, solver: str = "auto", budget: Optional[int] = None):
    """Color ``g``; returns ``(status, coloring, trace)``.

    ``auto`` uses the constructive wheel pipeline when ``g`` carries wheel
    host metadata and every list has at least five colors, and the exact
    solver otherwise.
    """
    x = build_incidence_graph(g)
    missing = [str(y) for y in x.nodes if y not in lists]
    if missing:
        raise InvalidInput(f"no list for {', '.join(missing[:5])}")
    constructive = (
        solver == "auto" and host is not None and all(len(lists[y]) >= LIST_SIZE for y in x.nodes)
    )
    if constructive:
        n, emb = host
        wheel, lab = build_wheel(n)
        try:
            case = classify_wheel_subgraph(g, wheel, lab, emb)
        except NotASubgraphOfWheel as exc:
            raise InvalidInput(f"host metadata: {exc}") from None
        trace = {"pipeline": "wheel_subgraph", "case": type(case).__name__}
        if isinstance(case, FullWheel):
            base_lists = {b: lists[y] for b, y in case.element_map.items()}
            base_col, wt = color_wheel_traced(n, base_lists)
            coloring = {case.element_map[b]: c for b, c in base_col.items()}
            trace["wheel"] = wt.to_json()
        else:
            coloring = color_wheel_subgraph(g, case, lists)
            trace.update({k: v for k, v in vars(case).items() if k != "element_map"})
        return Status.COLORED, coloring, trace
    out = exact_color(x, lists, budget=budget)
    trace = {
        "pipeline": "exact",
        "result": out.status.value,
        "nodes_expanded": out.nodes_expanded,
        "seconds": round(out.wall_time, 6),
    }
    return out.status, out.coloring, trace


def _status_code(status: Status) -> int:
    return {Status.COLORED: EXIT_OK, Status.UNSAT: EXIT_UNSAT, Status.ABORTED: EXIT_BUDGET}[status]


def cmd_color(args) -> int:
    g, host = load_graph(args.graph)
    budget = args.budget if args.budget is not None else default_budget()
    if args.trials:
        return _color_trials(g, host, args, budget)
    if not args.lists:
        raise InvalidInput("color needs --lists (or --trials)")
    lists = io.lists_from_json(io.read_json(args.lists))
    status, coloring, trace = color_graph(g, host, lists, args.solver, budget)
    if args.trace:
        io.write_json(trace, args.trace)
    if status is not Status.COLORED:
        print(f"no coloring: {status.value}", file=sys.stderr)
        return _status_code(status)
    bad = verify_coupled_coloring(build_incidence_graph(g), lists, coloring)
    if bad is not None:
        print(f"internal error, produced an invalid coloring: {bad}", file=sys.stderr)
        return EXIT_UNSAT
    io.write_json(io.coloring_to_json(coloring), args.out)
    return EXIT_OK


def _color_trials(g, host, args, budget) -> int:
    rng = np.random.default_rng(args.seed)
    x = build_incidence_graph(g)
    results = Counter()
    pipelines = Counter()
    for _ in range(args.trials):
        lists = random_lists(x.nodes, args.list_size, args.palette, rng)
        status, coloring, trace = color_graph(g, host, lists, args.solver, budget)
        pipelines[trace.get("case", trace["pipeline"])] += 1
        if status is Status.COLORED:
            ok = verify_coupled_coloring(x, lists, coloring) is None
            results["valid" if ok else "invalid"] += 1
        else:
            results[status.value] += 1
    summary = {"trials": args.trials, "results": dict(results), "cases": dict(pipelines)}
    io.write_json(summary, args.out)
    if results["invalid"] or results[Status.UNSAT.value]:
        return EXIT_UNSAT
    if results[Status.ABORTED.value]:
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / certify / export-dot / bench
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    g, _ = load_graph(args.graph)
    lists = io.lists_from_json(io.read_json(args.lists))
    coloring = io.coloring_from_json(io.read_json(args.coloring))
    x = build_incidence_graph(g)
    missing = [str(y) for y in x.nodes if y not in lists]
    if missing:
        raise InvalidInput(f"no list for {', '.join(missing[:5])}")
    try:
        bad = verify_coupled_coloring(x, lists, coloring)
    except MissingNode as exc:
        print(f"Violation: {exc.args[0]} has no color")
        return EXIT_UNSAT
    if bad is None:
        print("Valid")
        return EXIT_OK
    print(f"Violation: {bad}")
    return EXIT_UNSAT


def cmd_certify(args) -> int:
    if args.all == bool(args.name):
        raise InvalidInput("certify needs exactly one of --all or --name")
    names = list(CERTIFICATES) if args.all else [args.name]
    budget = args.budget if args.budget is not None else 0
    reports = []
    for name in names:
        try:
            report = run_certificate(name, args.param, budget)
        except ValueError as exc:
            raise InvalidInput(str(exc)) from None
        reports.append(report)
        print(json.dumps(report.to_json(), sort_keys=True))
    if all(r.status == CONFIRMED for r in reports):
        return EXIT_OK
    if any(r.status == INCOMPLETE for r in reports):
        return EXIT_BUDGET
    return EXIT_UNSAT


def cmd_export_dot(args) -> int:
    g, _ = load_graph(args.graph)
    text = io.to_dot(g, args.view)
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def bench_color_wheel(sizes: Sequence[int], repeats: int = 5, seed: int = 0) -> list[dict]:
    """Median wall time of :func:`color_wheel` on random 5-lists (palette 15) per ``n``.

    List generation is excluded from the timing; each repeat draws new lists.
    Like :mod:`timeit`, the cyclic garbage collector is paused while timing so
    full-heap collection passes do not leak into the measurement.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        w, _ = build_wheel(n)
        times = []
        for _ in range(repeats):
            lists = random_lists(w.elements(), LIST_SIZE, 15, rng)
            gc.collect()
            was_enabled = gc.isenabled()
            gc.disable()
            try:
                start = time.perf_counter()
                color_wheel(n, lists)
                times.append(time.perf_counter() - start)
            finally:
                if was_enabled:
                    gc.enable()
        rows.append({"n": n, "median_seconds": statistics.median(times), "runs": times})
    return rows


def cmd_bench(args) -> int:
    sizes = _ints(args.sizes)
    if not sizes or min(sizes) < 4:
        raise InvalidInput("--sizes needs wheel sizes >= 4")
    for row in bench_color_wheel(sizes, args.repeats, args.seed):
        print(json.dumps(row))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coupled-chroma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a plane graph as JSON")
    p.add_argument("--kind", choices=GEN_KINDS, required=True)
    p.add_argument("--n", type=int, help="wheel or cycle size")
    p.add_argument("--delete-vertices", help="wheel-subgraph: comma-separated vertex ids of W_n")
    p.add_argument("--delete-edges", help="wheel-subgraph: comma-separated edge ids of W_n")
    p.add_argument("--graph6", help="graph6 string (with --rotations)")
    p.add_argument("--rotations", help='JSON file {"rotations": [[nbrs...], ...], "outer": [u, v]}')
    p.add_argument("--stellate", action="store_true", help="stellate the outer face")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--lists-out", help="also write random lists here")
    p.add_argument("--list-size", type=int, default=LIST_SIZE)
    p.add_argument("--palette", type=int, default=15)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="color a graph from lists")
    p.add_argument("--graph", required=True)
    p.add_argument("--lists")
    p.add_argument("--solver", choices=("auto", "exact"), default="auto")
    p.add_argument("--budget", type=int, help="exact-search node budget (0 = unlimited)")
    p.add_argument("--out", help="coloring output path (default stdout)")
    p.add_argument("--trace", help="write the run trace JSON here")
    p.add_argument("--trials", type=int, default=0, help="color this many random list assignments")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--list-size", type=int, default=LIST_SIZE)
    p.add_argument("--palette", type=int, default=15)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against a graph and lists")
    p.add_argument("--graph", required=True)
    p.add_argument("--lists", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="run the lower-bound and structure certificates")
    p.add_argument("--all", action="store_true")
    p.add_argument("--name", choices=sorted(CERTIFICATES))
    p.add_argument("--param", type=int, help="n for adversarial, k for xk_three_colorability")
    p.add_argument("--budget", type=int, help="node budget per search (default unlimited)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("export-dot", help="render a graph as Graphviz DOT")
    p.add_argument("--graph", required=True)
    p.add_argument("--view", choices=io.DOT_VIEWS, default="primal")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("bench", help="time color_wheel on random 5-lists")
    p.add_argument("--sizes", default="100,1000,10000,100000")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, GraphError, ListTooShort, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
