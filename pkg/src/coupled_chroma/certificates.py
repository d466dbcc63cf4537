"""Machine-checked lower bounds and structural facts about wheels and Halin graphs.

Every certificate is either a complete exhaustive search (UNSAT results are
re-checked by counting colorings) or an exact structural check; nothing here
samples.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from .incidence import IncidenceGraph, build_incidence_graph, build_Xn, uniform_lists, verify_coupled_coloring
from .plane_graph import (
    ElementRef,
    PlaneGraph,
    build_cycle,
    build_k4_minus_edge,
    build_prism,
    build_wheel,
    dual,
    k4_minus_edge_labels,
    plane_isomorphism,
    stellate_face,
)
from .solver import Status, count_colorings, exact_color

CONFIRMED = "confirmed"
REFUTED = "refuted"
INCOMPLETE = "incomplete"


@dataclass
class CertificateReport:
    name: str
    claim: str
    status: str
    evidence: dict = field(default_factory=dict)

    @property
    def confirmed(self) -> bool:
        return self.status == CONFIRMED

    def to_json(self) -> dict:
        return asdict(self)


def build_adversarial_lists(n: int) -> dict:
    """4-lists on ``W_n`` (``n >= 7``) admitting no coupled coloring.

    Hub ``{1,2,3,4}``, outer face ``{5,6,7,8}``; the four triangles
    ``f1 x1 f2``, ``x2 f3 x3``, ``f4 x4 f5``, ``x5 f6 x6`` of ``X_n`` get
    ``{1,2,5,6}``, ``{1,2,7,8}``, ``{3,4,5,6}``, ``{3,4,7,8}``. Any hub color
    ``a`` and face color ``b`` leave one of these triangles two colors.
    Elements past ``x6`` get ``{1,2,5,6}``.
    """
    if n < 7:
        raise ValueError(f"adversarial lists need n >= 7, got {n}")
    w, lab = build_wheel(n)
    lists = {y: frozenset({1, 2, 5, 6}) for y in w.elements()}
    lists[ElementRef("v", lab.hub)] = frozenset({1, 2, 3, 4})
    lists[ElementRef("f", lab.outer)] = frozenset({5, 6, 7, 8})
    sigma = lab.sigma()  # f1, x1, f2, x2, f3, x3, ...
    blocks = [(0, {1, 2, 5, 6}), (3, {1, 2, 7, 8}), (6, {3, 4, 5, 6}), (9, {3, 4, 7, 8})]
    for start, colors in blocks:
        for y in sigma[start:start + 3]:
            lists[y] = frozenset(colors)
    return lists


def wheel_core(k: int) -> IncidenceGraph:
    """``X(W_k)`` without the hub and the outer face (``k >= 4``)."""
    w, lab = build_wheel(k)
    if k >= 5:
        return build_Xn(w, lab)
    return build_incidence_graph(w).without([ElementRef("v", lab.hub), ElementRef("f", lab.outer)])


def _search(x: IncidenceGraph, lists, budget: int) -> dict:
    out = exact_color(x, lists, budget=budget)
    ev = {
        "result": out.status.value,
        "nodes_expanded": out.nodes_expanded,
        "seconds": round(out.wall_time, 6),
    }
    if out.status is Status.UNSAT:
        ev["count_colorings"] = count_colorings(x, lists, cap=1)
    elif out.status is Status.COLORED:
        ev["witness_valid"] = verify_coupled_coloring(x, lists, out.coloring) is None
        ev["witness"] = {str(y): c for y, c in out.coloring.items()}
    return ev


def _unsat_status(*evidence: dict) -> str:
    if any(ev["result"] == Status.ABORTED.value for ev in evidence):
        return INCOMPLETE
    if all(ev["result"] == Status.UNSAT.value and ev["count_colorings"] == 0 for ev in evidence):
        return CONFIRMED
    return REFUTED


def _uniform_wheel(n: int, budget: int) -> CertificateReport:
    w, _ = build_wheel(n)
    x = build_incidence_graph(w)
    ev = _search(x, uniform_lists(x, range(1, 5)), budget)
    return CertificateReport(
        f"w{n}_not_4",
        f"X(W{n}) has no proper coloring with colors 1..4 (W{n} is not 4-coupled-colorable)",
        _unsat_status(ev),
        {"nodes": len(x), "edges": x.number_of_edges(), **ev},
    )


def cert_w5(param=None, budget: int = 0) -> CertificateReport:
    return _uniform_wheel(5, budget)


def cert_w6(param=None, budget: int = 0) -> CertificateReport:
    return _uniform_wheel(6, budget)


def cert_adversarial(param: Optional[int] = None, budget: int = 0) -> CertificateReport:
    sizes = [param] if param is not None else [7, 8, 9, 10]
    per_n = {}
    for n in sizes:
        w, _ = build_wheel(n)
        per_n[str(n)] = _search(build_incidence_graph(w), build_adversarial_lists(n), budget)
    return CertificateReport(
        "adversarial",
        "W_n has no coupled coloring from the adversarial 4-lists",
        _unsat_status(*per_n.values()),
        {"per_n": per_n},
    )


def cert_k4_minus_edge(param=None, budget: int = 0) -> CertificateReport:
    g = build_k4_minus_edge()
    names = k4_minus_edge_labels(g)
    x = build_incidence_graph(g)
    clique = [names[k] for k in ("x0", "x1", "x2", "f2", "f'")]
    is_clique = all(x.has_edge(a, b) for a, b in itertools.combinations(clique, 2))
    at4 = _search(x, uniform_lists(x, range(1, 5)), budget)
    at5 = _search(x, uniform_lists(x, range(1, 6)), budget)
    k4, _ = build_wheel(4)
    xk4 = build_incidence_graph(k4)
    k4_at4 = _search(xk4, uniform_lists(xk4, range(1, 5)), budget)
    statuses = [at4["result"], at5["result"], k4_at4["result"]]
    if Status.ABORTED.value in statuses:
        status = INCOMPLETE
    elif (
        is_clique
        and _unsat_status(at4) == CONFIRMED
        and at5["result"] == Status.COLORED.value
        and at5["witness_valid"]
        and k4_at4["result"] == Status.COLORED.value
    ):
        status = CONFIRMED
    else:
        status = REFUTED
    return CertificateReport(
        "k4_minus_edge",
        "K4 minus an edge contains a K5 in its incidence graph, so it needs 5 colors while K4 needs 4",
        status,
        {
            "clique": [str(y) for y in clique],
            "clique_present": is_clique,
            "uniform_4": at4,
            "uniform_5": at5,
            "k4_uniform_4": k4_at4,
        },
    )


def cert_prism(param=None, budget: int = 0) -> CertificateReport:
    g = build_prism()
    x = build_incidence_graph(g)
    at5 = _search(x, uniform_lists(x, range(1, 6)), budget)
    at6 = _search(x, uniform_lists(x, range(1, 7)), budget)
    if Status.ABORTED.value in (at5["result"], at6["result"]):
        status = INCOMPLETE
    elif _unsat_status(at5) == CONFIRMED and at6["result"] == Status.COLORED.value and at6["witness_valid"]:
        status = CONFIRMED
    else:
        status = REFUTED
    return CertificateReport(
        "prism_not_5",
        "the triangular prism (a Halin graph) is not 5-coupled-colorable but is 6-coupled-colorable",
        status,
        {"nodes": len(x), "edges": x.number_of_edges(), "uniform_5": at5, "uniform_6": at6},
    )


def halin_structure(outerplanar: PlaneGraph) -> dict:
    """Check that the dual of ``outerplanar`` with its outer face stellated is Halin.

    In the dual, edges crossing original edges must form a spanning tree whose
    leaves are exactly the faces around the new vertex, and edges crossing
    the new spokes must form one cycle through exactly those leaves.
    """
    m = outerplanar.dart_count
    s = stellate_face(outerplanar, outerplanar.outer_face)
    d, _ = dual(s)
    nv = d.vertex_count
    tree_adj = {v: set() for v in range(nv)}
    cycle_adj = {v: set() for v in range(nv)}
    tree_edges = cycle_edges = 0
    for a, b in d.edges:
        u, w = d.origin[a], d.origin[b]
        if a < m:
            tree_adj[u].add(w)
            tree_adj[w].add(u)
            tree_edges += 1
        else:
            cycle_adj[u].add(w)
            cycle_adj[w].add(u)
            cycle_edges += 1
    stellation_faces = {d.origin[a] for a in range(m, d.dart_count)}

    def connected(adj, nodes):
        nodes = set(nodes)
        if not nodes:
            return True
        start = next(iter(nodes))
        seen, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()]:
                if w in nodes and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == nodes

    spanning_tree = tree_edges == nv - 1 and connected(tree_adj, range(nv))
    leaves = {v for v in range(nv) if len(tree_adj[v]) == 1}
    cycle_ok = (
        cycle_edges == len(leaves)
        and all(len(cycle_adj[v]) == (2 if v in leaves else 0) for v in range(nv))
        and connected(cycle_adj, leaves)
    )
    return {
        "dual_vertices": nv,
        "dual_edges": d.edge_count,
        "spanning_tree": spanning_tree,
        "leaves_are_stellation_faces": leaves == stellation_faces,
        "cycle_through_leaves": cycle_ok,
        "halin": spanning_tree and leaves == stellation_faces and cycle_ok,
        "dual": d,
    }


def cert_halin_duality(param=None, budget: int = 0) -> CertificateReport:
    corpus = {f"cycle({k})": (build_cycle(k), build_wheel(k + 1)[0]) for k in range(3, 9)}
    corpus["k4_minus_edge"] = (build_k4_minus_edge(), build_prism())
    results = {}
    ok = True
    for name, (o, expected) in corpus.items():
        info = halin_structure(o)
        info["matches_expected"] = plane_isomorphism(info.pop("dual"), expected) is not None
        ok = ok and info["halin"] and info["matches_expected"]
        results[name] = info
    return CertificateReport(
        "halin_duality",
        "duals of stellated outerplanar graphs decompose as a tree plus a cycle through its leaves",
        CONFIRMED if ok else REFUTED,
        {"corpus": results},
    )


def cert_xk_three_colorability(param: Optional[int] = None, budget: int = 0) -> CertificateReport:
    sizes = [param] if param is not None else list(range(4, 13))
    per_k = {}
    status = CONFIRMED
    for k in sizes:
        x = wheel_core(k)
        out = exact_color(x, uniform_lists(x, (1, 2, 3)), budget=budget)
        expected = (k - 1) % 3 == 0
        if out.status is Status.ABORTED:
            status = INCOMPLETE
            per_k[str(k)] = {"result": out.status.value}
            continue
        colorable = out.status is Status.COLORED
        per_k[str(k)] = {
            "three_colorable": colorable,
            "predicted": expected,
            "match": colorable == expected,
            "nodes_expanded": out.nodes_expanded,
        }
        if colorable != expected and status != INCOMPLETE:
            status = REFUTED
    return CertificateReport(
        "xk_three_colorability",
        "X_k is 3-colorable exactly when k - 1 is divisible by 3",
        status,
        {"per_k": per_k},
    )


CERTIFICATES: dict[str, Callable[..., CertificateReport]] = {
    "w5_not_4": cert_w5,
    "w6_not_4": cert_w6,
    "adversarial": cert_adversarial,
    "k4_minus_edge": cert_k4_minus_edge,
    "prism_not_5": cert_prism,
    "halin_duality": cert_halin_duality,
    "xk_three_colorability": cert_xk_three_colorability,
}


def run_certificate(name: str, param: Optional[int] = None, budget: int = 0) -> CertificateReport:
    """Run one certificate; ``budget`` caps search nodes (0 means complete search)."""
    try:
        fn = CERTIFICATES[name]
    except KeyError:
        raise ValueError(f"unknown certificate {name!r}; choose from {sorted(CERTIFICATES)}") from None
    return fn(param, budget)


def run_all(budget: int = 0) -> list[CertificateReport]:
    return [run_certificate(name, budget=budget) for name in CERTIFICATES]
