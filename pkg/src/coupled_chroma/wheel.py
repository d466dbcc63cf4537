"""Constructive 5-list coupled coloring of wheels and of their connected subgraphs.

Wheels are handled by hub-first coloring: the hub ``x0`` and outer face
``f0`` are adjacent to everything else, so once they are colored what is left
is the 4-regular graph ``X_n`` on ``f_1, x_1, ..., f_{n-1}, x_{n-1}`` (the
square of a cycle in that order).

* Common hub color: both take it, and ``X_n`` is colored from 4-lists by the
  degree-choosability procedure.
* Disjoint hub lists: pick the hub pair that sits inside the fewest node
  lists, rotate the cyclic order to start at four nodes that kept 4 colors,
  color three nodes around the seam by hand and sweep the remaining strip.

Subgraphs are split into full wheel, outerplanar, hub-deleted cycle and
spoke-deleted cases; spoke-deleted graphs are subdivisions of a smaller wheel
or of the triple edge, and the subdivision vertices are colored last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Union

import numpy as np

from .errors import (
    BaseColoringInvalid,
    CaseMismatch,
    GraphError,
    ListTooShort,
    NotASubdivision,
    NotASubgraphOfWheel,
    WouldDisconnect,
)
from .incidence import (
    CoupledColoring,
    IncidenceGraph,
    ListAssignment,
    build_incidence_graph,
    build_Xn,
    verify_coupled_coloring,
)
from .plane_graph import (
    ElementRef,
    PlaneGraph,
    SubgraphEmbedding,
    WheelLabeling,
    build_triple_edge,
    build_wheel,
    contract_subdivision,
    delete_elements,
    element_map_from_darts,
    plane_isomorphism,
    reroot_outer_face,
)
from .solver import Status, color_strip, degree_choosable_color, exact_color

LIST_SIZE = 5


@lru_cache(maxsize=32)
def wheel_frame(n: int) -> tuple[PlaneGraph, WheelLabeling, IncidenceGraph]:
    """``W_n``, its labeling, and ``X_n`` (the full ``X(K_4)`` when ``n == 4``)."""
    w, lab = build_wheel(n)
    x = build_incidence_graph(w) if n == 4 else build_Xn(w, lab)
    return w, lab, x


def truncate_lists(lists: ListAssignment, elements: Iterable, size: int = LIST_SIZE) -> dict:
    """Keep the ``size`` smallest colors of every element's list."""
    out = {}
    for y in elements:
        try:
            colors = lists[y]
        except KeyError:
            raise ListTooShort(f"{y} has no list") from None
        if len(colors) < size:
            raise ListTooShort(f"{y} has {len(colors)} colors, needs {size}")
        out[y] = frozenset(sorted(colors)[:size]) if len(colors) > size else frozenset(colors)
    return out


# ---------------------------------------------------------------------------
# Hub pair selection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HubPairChoice:
    a_prime: int
    b_prime: int
    occurrence_count: int
    three_vertices: frozenset


def pair_occurrences(node_list, hub_list, face_list) -> int:
    """How many hub pairs ``{a, b}`` fit inside ``node_list``."""
    node_list = set(node_list)
    return len(node_list & set(hub_list)) * len(node_list & set(face_list))


def pair_counts(nodes: Iterable, lists: ListAssignment, hub_list, face_list) -> dict:
    counts = {(a, b): 0 for a in sorted(hub_list) for b in sorted(face_list)}
    hub_set, face_set = set(hub_list), set(face_list)
    for y in nodes:
        lst = lists[y]
        l1 = [a for a in lst if a in hub_set]
        if not l1:
            continue
        l2 = [b for b in lst if b in face_set]
        for a in l1:
            for b in l2:
                counts[(a, b)] += 1
    return counts


def choose_hub_pair(xn: IncidenceGraph, lists: ListAssignment, hub_list, face_list) -> HubPairChoice:
    """Least-used color pair for hub and outer face; ties go to the smallest ``(a, b)``.

    Raises:
        ValueError: If the hub lists overlap or are not of size 5.
    """
    if set(hub_list) & set(face_list):
        raise ValueError("hub and outer-face lists must be disjoint")
    if len(set(hub_list)) != LIST_SIZE or len(set(face_list)) != LIST_SIZE:
        raise ValueError("hub and outer-face lists must have exactly 5 colors")
    counts = pair_counts(xn.nodes, lists, hub_list, face_list)
    (a, b), best = min(counts.items(), key=lambda kv: (kv[1], kv[0]))
    threes = frozenset(y for y in xn.nodes if a in lists[y] and b in lists[y])
    return HubPairChoice(a, b, best, threes)


# ---------------------------------------------------------------------------
# Wheels
# ---------------------------------------------------------------------------


@dataclass
class WheelTrace:
    """Record of one run of :func:`color_wheel_traced`.

    ``shift`` relabels the cyclic order: working position ``k`` is
    ``sigma[(k + shift) % (2n - 2)]``. An odd shift exchanges the roles of
    faces and rim vertices.
    """

    n: int
    case: str
    hub_colors: tuple = ()
    hub_pair: Optional[HubPairChoice] = None
    shift: int = 0
    window: tuple = ()
    bounds: dict = field(default_factory=dict)
    steps: list = field(default_factory=list)
    method: str = ""

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "case": self.case,
            "hub_colors": list(self.hub_colors),
            "method": self.method,
            "steps": [{"element": str(y), "color": c, "rule": r} for y, c, r in self.steps],
        }
        if self.hub_pair is not None:
            out["hub_pair"] = {
                "a_prime": self.hub_pair.a_prime,
                "b_prime": self.hub_pair.b_prime,
                "occurrence_count": self.hub_pair.occurrence_count,
                "three_vertices": sorted(str(y) for y in self.hub_pair.three_vertices),
            }
            out["rotation"] = {"shift": self.shift, "exchanged": self.shift % 2 == 1}
            out["window"] = [str(y) for y in self.window]
            out["bounds"] = {k: {"size": s, "required": r} for k, (s, r) in self.bounds.items()}
        return out


# L'' lower bounds after coloring f_{n-1}, x_1, x_{n-1} (working positions).
_SEAM_BOUNDS = (("f1", 0, 2), ("f2", 2, 3), ("x2", 3, 3), ("x_{n-2}", -3, 1), ("f_{n-2}", -4, 2))


def color_wheel(n: int, lists: ListAssignment) -> dict:
    """Coupled coloring of ``W_n`` from lists of at least 5 colors.

    ``lists`` is keyed by the elements of :func:`build_wheel` ``(n)``. Longer
    lists are cut to their 5 smallest colors first.

    Raises:
        ListTooShort: If some element has fewer than 5 colors.
    """
    return color_wheel_traced(n, lists)[0]


def color_wheel_traced(n: int, lists: ListAssignment) -> tuple[dict, WheelTrace]:
    w, lab, x = wheel_frame(n)
    trunc = truncate_lists(lists, w.elements())
    hub, outer = ElementRef("v", lab.hub), ElementRef("f", lab.outer)
    if n == 4:
        out = exact_color(x, trunc, budget=0)
        assert out.status is Status.COLORED
        trace = WheelTrace(n, "k4", method="exact")
        trace.steps = [(y, c, "exact") for y, c in out.coloring.items()]
        return out.coloring, trace
    common = trunc[hub] & trunc[outer]
    if common:
        return _common_hub_color(n, x, trunc, hub, outer, min(common))
    return _disjoint_hub_lists(n, x, trunc, hub, outer)


def _common_hub_color(n, x, trunc, hub, outer, a):
    reduced = {y: trunc[y] - {a} for y in x.nodes}
    out = degree_choosable_color(x, reduced)
    coloring = dict(out.coloring)
    coloring[hub] = coloring[outer] = a
    trace = WheelTrace(n, "common_hub_color", hub_colors=(a, a), method=out.method)
    trace.steps = [(hub, a, "hub"), (outer, a, "hub")]
    trace.steps += [(y, out.coloring[y], out.method) for y in x.nodes]
    return coloring, trace


def _disjoint_hub_lists(n, x, trunc, hub, outer):
    choice = choose_hub_pair(x, trunc, trunc[hub], trunc[outer])
    a, b = choice.a_prime, choice.b_prime
    if not choice.occurrence_count < (n - 1) / 2:
        raise AssertionError("hub pair occurs too often")
    sigma = x.sigma
    N = len(sigma)
    lp = [trunc[y] - {a, b} for y in sigma]
    roomy = [len(s) >= 4 for s in lp]
    shift = next(
        (k for k in range(N) if all(roomy[(k + i) % N] for i in range(4))), None
    )
    if shift is None:
        raise AssertionError("no four consecutive nodes kept four colors")

    def at(k):
        return (k + shift) % N

    def node(k):
        return sigma[at(k)]

    coloring = {hub: a, outer: b}
    trace = WheelTrace(n, "disjoint_hub_lists", hub_colors=(a, b), hub_pair=choice, shift=shift)
    trace.window = tuple(node(k) for k in range(4))
    trace.steps = [(hub, a, "hub"), (outer, b, "hub")]

    # f_{n-1} and x_1 are not adjacent; x_{n-1} is adjacent to both.
    fl, x1, xl, f1 = N - 2, 1, N - 1, 0
    shared = lp[at(fl)] & lp[at(x1)]
    if shared:
        p = q = min(shared)
        rule = "shared"
    else:
        spare = sorted((lp[at(fl)] | lp[at(x1)]) - trunc[node(f1)])
        c = spare[0]
        if c in lp[at(x1)]:
            p, q = min(lp[at(fl)]), c
        else:
            p, q = c, min(lp[at(x1)])
        rule = "avoid f1"
    r = min(lp[at(xl)] - {p, q})
    seam = {fl: p, x1: q, xl: r}
    for k, c in seam.items():
        coloring[node(k)] = c
    trace.steps += [(node(fl), p, rule), (node(x1), q, rule), (node(xl), r, "seam")]

    def reduced(k):
        y = node(k)
        return lp[at(k)] - {c for j, c in seam.items() if x.has_edge(y, node(j))}

    trace.bounds = {}
    for name, k, need in _SEAM_BOUNDS:
        size = len(reduced(k % N))
        trace.bounds[name] = (size, need)
        if size < need:
            raise AssertionError(f"bound at {name}: {size} < {need}")

    order = [node(k) for k in range(2, N - 2)]
    strip_lists = {node(k): reduced(k) for k in range(2, N - 2)}
    tail_x = node(N - 3)
    tail_f = node(N - 4)
    cx = min(strip_lists[tail_x])
    cf = min(strip_lists[tail_f] - {cx})
    strip = x.subgraph(order, sigma=order)
    out = color_strip(strip, strip_lists, {tail_f: cf, tail_x: cx})
    trace.steps += [(tail_x, cx, "fixed"), (tail_f, cf, "fixed")]
    trace.steps += [(y, out.coloring[y], "strip") for y in reversed(order[:-2])]
    coloring.update(out.coloring)
    last = min(reduced(f1) - {coloring[node(2)]})
    coloring[node(f1)] = last
    trace.steps.append((node(f1), last, "last"))
    trace.method = "strip"
    return coloring, trace


# ---------------------------------------------------------------------------
# Subdivisions
# ---------------------------------------------------------------------------


def _contracted_map(h: PlaneGraph, k: PlaneGraph, branch, dart_of, base_to_k) -> dict:
    """Compose a base->contracted element map with contracted->``h``."""
    out = {}
    for bref, kref in base_to_k.items():
        if kref.kind == "v":
            out[bref] = ElementRef("v", branch[kref.id])
        else:
            out[bref] = ElementRef("f", h.face_of[dart_of[k.faces[kref.id][0]]])
    return out


def _match_base(h: PlaneGraph, base: PlaneGraph, branch: list[int], seed_images=None) -> Optional[dict]:
    """Element map base -> ``h`` if ``h`` is a subdivision of ``base`` on ``branch``."""
    k, branch, dart_of = contract_subdivision(h, branch)
    if seed_images:
        for seed in seed_images:
            found = plane_isomorphism(base, k, seed=seed, mirror=False)
            if found:
                return _contracted_map(h, k, branch, dart_of, element_map_from_darts(base, k, *found))
    found = plane_isomorphism(base, k)
    if found is None:
        return None
    return _contracted_map(h, k, branch, dart_of, element_map_from_darts(base, k, *found))


def extend_subdivision_coloring(
    h: PlaneGraph,
    base: PlaneGraph,
    mapping: dict,
    base_coloring: CoupledColoring,
    lists: ListAssignment,
) -> dict:
    """Lift a coupled coloring of ``base`` to its subdivision ``h``.

    ``mapping`` sends every base vertex and face to its counterpart in ``h``.
    Base elements keep their colors; each subdivision vertex then sees at most
    its two path neighbors and two faces, so five colors always leave one.

    Raises:
        NotASubdivision: If ``h`` is not a subdivision of ``base`` matching
            ``mapping``.
        BaseColoringInvalid: If ``base_coloring`` is not valid for the lists
            pulled back through ``mapping``.
        ListTooShort: If a subdivision vertex has fewer than 5 colors.
    """
    if set(mapping) != set(base.elements()):
        raise NotASubdivision("mapping must cover every base vertex and face")
    if len(set(mapping.values())) != len(mapping) or any(
        a.kind != b.kind for a, b in mapping.items()
    ):
        raise NotASubdivision("mapping must be injective and kind-preserving")
    if h.face_count != base.face_count:
        raise NotASubdivision("subdivision must keep the number of faces")
    branch = sorted(b.id for a, b in mapping.items() if a.kind == "v")
    if base.dart_count:
        try:
            k, branch, dart_of = contract_subdivision(h, branch)
        except GraphError as exc:
            raise NotASubdivision(str(exc)) from None
        if not _mapping_is_isomorphism(h, base, k, branch, dart_of, mapping):
            raise NotASubdivision("contracted graph does not match the base under the mapping")
    elif h.dart_count:
        raise NotASubdivision("an edgeless base has no subdivisions")

    base_lists = {y: lists[mapping[y]] for y in mapping}
    bad = verify_coupled_coloring(build_incidence_graph(base), base_lists, base_coloring)
    if bad is not None:
        raise BaseColoringInvalid(str(bad))

    xh = build_incidence_graph(h)
    coloring = {mapping[y]: c for y, c in base_coloring.items()}
    for v in range(h.vertex_count):
        y = ElementRef("v", v)
        if y in coloring:
            continue
        if len(lists[y]) < LIST_SIZE:
            raise ListTooShort(f"{y} has {len(lists[y])} colors, needs {LIST_SIZE}")
        used = {coloring[u] for u in xh.neighbors(y) if u in coloring}
        free = [c for c in sorted(lists[y]) if c not in used]
        if not free:
            raise AssertionError(f"subdivision vertex {y} has no color left")
        coloring[y] = free[0]
    return coloring


def _mapping_is_isomorphism(h, base, k, branch, dart_of, mapping) -> bool:
    target = mapping[ElementRef("v", base.origin[0])].id
    kv = branch.index(target)
    for e in k.vertex_darts(kv):
        for mirror in (False, True):
            found = plane_isomorphism(base, k, seed=(0, e), mirror=mirror)
            if found and _contracted_map(h, k, branch, dart_of, element_map_from_darts(base, k, *found)) == mapping:
                return True
    return False


# ---------------------------------------------------------------------------
# Subgraphs of wheels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FullWheel:
    n: int
    element_map: dict = field(compare=False)


@dataclass(frozen=True)
class OuterplanarDeletion:
    """Outerplanar once ``outer_face`` is the outer face.

    ``reason`` is ``"rim"`` when a rim vertex or edge is gone and
    ``"spokes"`` when the rim is whole but at most one spoke is left.
    """

    reason: str
    outer_face: int


@dataclass(frozen=True)
class HubDeleted:
    pass


@dataclass(frozen=True)
class SpokeCase:
    """Rim and hub intact with at least two spokes: a subdivision of ``base``.

    ``base`` is ``"triple_edge"`` for two spokes and ``"wheel"`` (``W_k``,
    ``k = spokes + 1``) otherwise. ``element_map`` sends base elements to
    elements of the subgraph.
    """

    spokes_remaining: int
    base: str
    base_n: Optional[int]
    element_map: dict = field(compare=False)


SubgraphCase = Union[FullWheel, OuterplanarDeletion, HubDeleted, SpokeCase]


def _check_embedding(g: PlaneGraph, host: PlaneGraph, emb: SubgraphEmbedding) -> None:
    if len(emb.vertex_map) != g.vertex_count or len(emb.dart_map) != g.dart_count:
        raise NotASubgraphOfWheel("embedding does not match the subgraph's size")
    if len(set(emb.vertex_map)) != len(emb.vertex_map) or len(set(emb.dart_map)) != len(emb.dart_map):
        raise NotASubgraphOfWheel("embedding is not injective")
    for d in range(g.dart_count):
        hd = emb.dart_map[d]
        if not 0 <= hd < host.dart_count:
            raise NotASubgraphOfWheel(f"dart {d} maps outside the host")
        if host.origin[hd] != emb.vertex_map[g.origin[d]]:
            raise NotASubgraphOfWheel(f"dart {d} changes origin under the embedding")
        if emb.dart_map[g.twin[d]] != host.twin[hd]:
            raise NotASubgraphOfWheel(f"dart {d} loses its twin under the embedding")


def classify_wheel_subgraph(
    g: PlaneGraph, host: PlaneGraph, lab: WheelLabeling, emb: SubgraphEmbedding
) -> SubgraphCase:
    """Decide which case of the subgraph analysis applies to ``g``.

    Order of tests: a missing rim vertex or rim edge makes the graph
    outerplanar (whatever else is missing); otherwise a missing hub leaves
    the rim cycle; otherwise only spokes are missing.

    Raises:
        NotASubgraphOfWheel: If the embedding is inconsistent.
    """
    try:
        lab.check(host)
    except GraphError as exc:
        raise NotASubgraphOfWheel(str(exc)) from None
    if host.vertex_count != lab.n or host.edge_count != 2 * (lab.n - 1):
        raise NotASubgraphOfWheel("host is not a wheel")
    _check_embedding(g, host, emb)
    n = lab.n
    present_v = set(emb.vertex_map)
    present_e = {host.edge_of[hd] for hd in emb.dart_map}
    rim = set(lab.rim_vertices)
    rim_edges = {e for e in range(host.edge_count) if set(host.edge_endpoints(e)) <= rim}
    if not rim <= present_v or not rim_edges <= present_e:
        return OuterplanarDeletion("rim", g.outer_face)
    if lab.hub not in present_v:
        return HubDeleted()
    g_of = {hv: gv for gv, hv in enumerate(emb.vertex_map)}
    hub = g_of[lab.hub]
    hub_darts = g.vertex_darts(hub)
    spokes = len(hub_darts)
    if spokes <= 1:
        if spokes == 0:
            raise NotASubgraphOfWheel("hub without spokes is disconnected")
        return OuterplanarDeletion("spokes", g.face_of[hub_darts[0]])
    ends = sorted(g.target(d) for d in hub_darts)
    ends.sort(key=lambda v: lab.rim_vertices.index(emb.vertex_map[v]))
    if spokes == 2:
        base = build_triple_edge()
        mapping = _match_base(g, base, ends)
        return SpokeCase(2, "triple_edge", None, mapping)
    k = spokes + 1
    base, _ = build_wheel(k)
    first = next(d for d in hub_darts if g.target(d) == ends[0])
    kgraph, branch, dart_of = contract_subdivision(g, [hub] + ends)
    seed = (1, dart_of.index(first))  # canonical dart 1 is hub -> x_1
    found = plane_isomorphism(base, kgraph, seed=seed, mirror=False)
    if found is None:
        found = plane_isomorphism(base, kgraph)
    if found is None:
        raise NotASubgraphOfWheel("spoke graph is not a wheel subdivision")
    mapping = _contracted_map(g, kgraph, branch, dart_of, element_map_from_darts(base, kgraph, *found))
    if spokes == n - 1 and g.vertex_count == n:
        return FullWheel(n, mapping)
    return SpokeCase(spokes, "wheel", k, mapping)


def color_wheel_subgraph(g: PlaneGraph, case: SubgraphCase, lists: ListAssignment) -> dict:
    """Coupled coloring of a connected subgraph of a wheel from 5-lists.

    Raises:
        ListTooShort: If some element of ``g`` has fewer than 5 colors.
        CaseMismatch: If ``case`` does not describe ``g``.
    """
    for y in g.elements():
        if y not in lists or len(lists[y]) < LIST_SIZE:
            raise ListTooShort(f"{y} needs at least {LIST_SIZE} colors")
    if isinstance(case, FullWheel):
        if g.vertex_count != case.n or g.face_count != case.n:
            raise CaseMismatch("graph is not the full wheel")
        base_lists = {b: lists[y] for b, y in case.element_map.items()}
        col = color_wheel(case.n, base_lists)
        return {case.element_map[b]: c for b, c in col.items()}
    if isinstance(case, OuterplanarDeletion):
        if not 0 <= case.outer_face < g.face_count:
            raise CaseMismatch("outer face out of range")
        rooted = reroot_outer_face(g, case.outer_face)
        out = exact_color(build_incidence_graph(rooted), lists, budget=0)
        if not out.colored:
            raise AssertionError("outerplanar subgraph reported uncolorable")
        return out.coloring
    if isinstance(case, HubDeleted):
        return _color_cycle(g, lists)
    if isinstance(case, SpokeCase):
        if case.base == "triple_edge":
            base = build_triple_edge()
        else:
            base = build_wheel(case.base_n)[0]
        if set(case.element_map) != set(base.elements()) or any(
            y not in lists for y in case.element_map.values()
        ):
            raise CaseMismatch("element map does not fit the graph")
        base_lists = {b: lists[y] for b, y in case.element_map.items()}
        if case.base == "triple_edge":
            out = exact_color(build_incidence_graph(base), base_lists, budget=0)
            base_col = out.coloring
        else:
            base_col = color_wheel(case.base_n, base_lists)
        return extend_subdivision_coloring(g, base, case.element_map, base_col, lists)
    raise CaseMismatch(f"unknown case {case!r}")


def _color_cycle(g: PlaneGraph, lists: ListAssignment) -> dict:
    if g.face_count != 2 or any(g.degree(v) != 2 for v in range(g.vertex_count)):
        raise CaseMismatch("hub-deleted case needs a cycle")
    fa, fb = ElementRef("f", 0), ElementRef("f", 1)
    ca = min(lists[fa])
    cb = min(c for c in lists[fb] if c != ca)
    coloring = {fa: ca, fb: cb}
    v = 0
    d = g.vertex_darts(0)[0]
    for _ in range(g.vertex_count):
        y = ElementRef("v", v)
        used = {ca, cb} | {coloring.get(ElementRef("v", u)) for u in g.neighbors(v)}
        coloring[y] = min(c for c in lists[y] if c not in used)
        d = g.rotation[g.twin[d]]
        v = g.origin[d]
    return coloring


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------


def random_lists(elements: Iterable, size: int, palette: int, rng) -> dict:
    """Independent uniform ``size``-subsets of ``1..palette`` per element.

    ``rng`` is a ``numpy.random.Generator`` or a seed.
    """
    rng = np.random.default_rng(rng)
    elements = list(elements)
    keys = rng.random((len(elements), palette))
    picks = np.argpartition(keys, size - 1, axis=1)[:, :size] + 1
    return {y: frozenset(row) for y, row in zip(elements, picks.tolist())}


def wheel_subgraph(
    n: int, vertices: Iterable[int] = (), edges: Iterable[int] = ()
) -> tuple[PlaneGraph, PlaneGraph, WheelLabeling, SubgraphEmbedding]:
    """Delete ``vertices`` and ``edges`` from ``W_n``; returns ``(g, host, labeling, embedding)``."""
    host, lab = build_wheel(n)
    g, emb = delete_elements(host, vertices, edges)
    return g, host, lab, emb


def random_wheel_subgraph(n: int, rng):
    """A random connected subgraph of ``W_n``, drawn so every case shows up.

    ``rng`` is a ``numpy.random.Generator`` or a seed. Returns
    ``(g, host, labeling, embedding)``.
    """
    rng = np.random.default_rng(rng)
    host, lab = build_wheel(n)
    k = n - 1
    # wheels are simple, so each endpoint pair names one edge
    by_ends = {frozenset(host.edge_endpoints(e)): e for e in range(host.edge_count)}
    spokes = [by_ends[frozenset((lab.hub, x))] for x in lab.rim_vertices]
    rims = [by_ends[frozenset((lab.rim_vertices[i], lab.rim_vertices[(i + 1) % k]))] for i in range(k)]

    def some(pool, count):
        return [pool[i] for i in rng.choice(len(pool), size=count, replace=False)]

    def each(pool, p):
        return [e for e, u in zip(pool, rng.random(len(pool))) if u < p]

    while True:
        mode = int(rng.integers(5))
        vs: list[int] = []
        es: list[int] = []
        if mode == 0:
            es = some(rims, int(rng.integers(1, min(2, k) + 1))) + each(spokes, 0.3)
        elif mode == 1:
            vs = some(list(lab.rim_vertices), int(rng.integers(1, max(1, k // 3) + 1)))
            es = each(spokes + rims, 0.15)
        elif mode == 2:
            vs = [lab.hub]
        elif mode == 3:
            es = some(spokes, k - int(rng.integers(1, k + 1)))
        else:
            es = each(spokes, 0.5)
            if rng.random() < 0.3:
                es += some(rims, 1)
        try:
            g, emb = delete_elements(host, vs, es)
        except WouldDisconnect:
            continue
        return g, host, lab, emb
