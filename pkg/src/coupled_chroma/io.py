"""JSON, DOT and graph6 serialization.

Graphs are stored as dart lists::

    {"vertices": N,
     "darts": [{"id": 0, "twin": 1, "next_at_vertex": 2, "origin": 0}, ...],
     "outer_face_dart": 0}

with an optional ``"host"`` block recording how the graph sits inside a wheel
(``{"kind": "wheel", "n": 9, "vertex_map": [...], "dart_map": [...]}``).
Lists and colorings are keyed by ``"v:3"`` / ``"f:0"`` strings.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .errors import GraphError
from .incidence import IncidenceGraph, build_incidence_graph
from .plane_graph import (
    ElementRef,
    PlaneGraph,
    SubgraphEmbedding,
    build_wheel,
    from_neighbor_rotation,
)

PathLike = Union[str, Path]


def graph_to_json(g: PlaneGraph, host: Optional[dict] = None) -> dict:
    data = {
        "vertices": g.vertex_count,
        "darts": [
            {"id": d.id, "twin": d.twin, "next_at_vertex": d.next_at_vertex, "origin": d.origin}
            for d in g.darts()
        ],
        "outer_face_dart": g.outer_dart if g.dart_count else None,
    }
    if host is not None:
        data["host"] = host
    return data


def graph_from_json(data: Mapping) -> PlaneGraph:
    """Parse a graph document; raises ``GraphError`` on malformed input."""
    try:
        n = int(data["vertices"])
        darts = sorted(data["darts"], key=lambda d: int(d["id"]))
        if [int(d["id"]) for d in darts] != list(range(len(darts))):
            raise GraphError("dart ids must be 0..D-1")
        twin = tuple(int(d["twin"]) for d in darts)
        rotation = tuple(int(d["next_at_vertex"]) for d in darts)
        origin = tuple(int(d["origin"]) for d in darts)
        outer = data.get("outer_face_dart")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed graph JSON: {exc}") from None
    return PlaneGraph(n, twin, rotation, origin, None if outer is None else int(outer))


def wheel_host(n: int, emb: Optional[SubgraphEmbedding] = None) -> dict:
    """Host metadata for a subgraph of ``build_wheel(n)`` (identity when ``emb`` is None)."""
    if emb is None:
        w, _ = build_wheel(n)
        emb = SubgraphEmbedding(tuple(range(w.vertex_count)), tuple(range(w.dart_count)))
    return {"kind": "wheel", "n": n, "vertex_map": list(emb.vertex_map), "dart_map": list(emb.dart_map)}


def host_from_json(data: Mapping) -> Optional[tuple[int, SubgraphEmbedding]]:
    host = data.get("host")
    if host is None:
        return None
    if host.get("kind") != "wheel":
        raise GraphError(f"unsupported host kind {host.get('kind')!r}")
    emb = SubgraphEmbedding(tuple(int(v) for v in host["vertex_map"]), tuple(int(d) for d in host["dart_map"]))
    return int(host["n"]), emb


def _parse_keyed(block: Mapping, what: str) -> dict:
    out = {}
    for key, value in block.items():
        try:
            out[ElementRef.parse(key)] = value
        except (ValueError, IndexError):
            raise GraphError(f"bad element key {key!r} in {what}") from None
    return out


def lists_to_json(lists: Mapping) -> dict:
    return {"lists": {str(y): sorted(int(c) for c in cs) for y, cs in _sorted_items(lists)}}


def lists_from_json(data: Mapping) -> dict:
    if "lists" not in data:
        raise GraphError("list document needs a 'lists' object")
    return {y: frozenset(int(c) for c in cs) for y, cs in _parse_keyed(data["lists"], "lists").items()}


def coloring_to_json(coloring: Mapping) -> dict:
    return {"coloring": {str(y): int(c) for y, c in _sorted_items(coloring)}}


def coloring_from_json(data: Mapping) -> dict:
    if "coloring" not in data:
        raise GraphError("coloring document needs a 'coloring' object")
    return {y: int(c) for y, c in _parse_keyed(data["coloring"], "coloring").items()}


def _sorted_items(mapping: Mapping):
    return sorted(mapping.items(), key=lambda kv: (kv[0].kind != "v", kv[0].id))


def read_json(path: PathLike) -> dict:
    with open(path) as fh:
        return json.load(fh)


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def write_json(data, path: Optional[PathLike]) -> None:
    """Write to ``path``, or to stdout when ``path`` is None or ``-``."""
    text = dumps(data)
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------


def primal_dot(g: PlaneGraph) -> str:
    lines = ["graph primal {"]
    lines += [f'  "v:{v}";' for v in range(g.vertex_count)]
    for e, (a, b) in enumerate(g.edges):
        lines.append(f'  "v:{g.origin[a]}" -- "v:{g.origin[b]}" [label="e{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dual_dot(g: PlaneGraph) -> str:
    """Primal graph with the dual overlaid: face nodes boxed, dual edges dashed."""
    lines = ["graph dual_overlay {"]
    lines += [f'  "v:{v}" [shape=circle];' for v in range(g.vertex_count)]
    for f in range(g.face_count):
        extra = ", peripheries=2" if f == g.outer_face else ""
        lines.append(f'  "f:{f}" [shape=box, color=blue{extra}];')
    for a, b in g.edges:
        lines.append(f'  "v:{g.origin[a]}" -- "v:{g.origin[b]}";')
    for a, b in g.edges:
        lines.append(f'  "f:{g.face_of[a]}" -- "f:{g.face_of[b]}" [style=dashed, color=blue];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def incidence_dot(x: IncidenceGraph) -> str:
    """``X(G)`` with vertices as circles and faces as boxes."""
    lines = ["graph incidence {"]
    for y in x.nodes:
        shape = "circle" if getattr(y, "kind", "v") == "v" else "box"
        lines.append(f'  "{y}" [shape={shape}];')
    for a, b in x.edges():
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


DOT_VIEWS = ("primal", "dual", "incidence")


def to_dot(g: PlaneGraph, view: str = "primal") -> str:
    if view == "primal":
        return primal_dot(g)
    if view == "dual":
        return dual_dot(g)
    if view == "incidence":
        return incidence_dot(build_incidence_graph(g))
    raise ValueError(f"unknown view {view!r}; choose from {DOT_VIEWS}")


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def graph_from_graph6(
    text: str, rotations: Sequence[Sequence[int]], outer: Optional[Sequence[int]] = None
) -> PlaneGraph:
    """Combine a graph6 string with counterclockwise neighbor orders.

    ``rotations[v]`` must list exactly the neighbors of ``v`` in the decoded
    graph; ``outer`` is a directed edge ``(u, v)`` on the outer face.
    """
    import networkx as nx

    try:
        abstract = nx.from_graph6_bytes(text.strip().encode("ascii"))
    except (ValueError, nx.NetworkXError) as exc:
        raise GraphError(f"bad graph6 string: {exc}") from None
    if len(rotations) != abstract.number_of_nodes():
        raise GraphError("rotation count does not match the graph6 vertex count")
    for v, nbrs in enumerate(rotations):
        if sorted(nbrs) != sorted(abstract.neighbors(v)):
            raise GraphError(f"rotation at {v} does not list its neighbors")
    return from_neighbor_rotation(rotations, None if outer is None else tuple(outer))


def graph_to_graph6(g: PlaneGraph) -> str:
    """graph6 of the underlying simple graph (rotations are lost)."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edge_list())
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
