"""Connected plane multigraphs stored as rotation systems.

A graph is a set of darts (half-edges). Every dart has a twin (the other half
of its edge), an origin vertex, and a rotation successor ``next_at_vertex``:
the next dart counterclockwise around the origin. Loops and parallel edges are
allowed, so bigons and the triple edge are ordinary inputs.

Faces are the orbits of ``d -> next_at_vertex(twin(d))``. A face is stored as
the tuple of darts along its walk, starting at its smallest dart, and faces are
numbered in order of their smallest dart. The outer face is designated by one
of its darts and never inferred.

The single vertex without edges is supported as a degenerate case with one
empty face, so that deleting everything but one vertex stays inside the type.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

from .errors import (
    Disconnected,
    GraphError,
    MissingElement,
    NonPlanarRotation,
    WouldDisconnect,
)


class ElementRef(NamedTuple):
    """A vertex (``kind == "v"``) or face (``kind == "f"``) of a plane graph."""

    kind: str
    id: int

    @classmethod
    def vertex(cls, i: int) -> "ElementRef":
        return cls("v", i)

    @classmethod
    def face(cls, i: int) -> "ElementRef":
        return cls("f", i)

    @classmethod
    def parse(cls, text: str) -> "ElementRef":
        kind, _, num = text.partition(":")
        if kind not in ("v", "f") or not num.isdigit():
            raise ValueError(f"bad element reference {text!r}")
        return cls(kind, int(num))

    def __str__(self) -> str:
        return f"{self.kind}:{self.id}"


class Dart(NamedTuple):
    id: int
    twin: int
    next_at_vertex: int
    origin: int


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable plane multigraph.

    Attributes:
        vertex_count: Number of vertices; ids are ``0..vertex_count-1``.
        twin: ``twin[d]`` is the opposite dart of ``d``.
        rotation: ``rotation[d]`` is ``next_at_vertex(d)``.
        origin: ``origin[d]`` is the vertex ``d`` leaves from.
        outer_dart: A dart on the outer face (``None`` only without edges).

    Derived on construction: ``faces``, ``face_of``, ``edges`` and
    ``edge_of``. Edges are numbered by the smaller of their two darts.

    Raises:
        GraphError: On a malformed dart structure.
        Disconnected: If the graph is not connected.
        NonPlanarRotation: If the rotation system violates Euler's formula.
    """

    vertex_count: int
    twin: tuple[int, ...]
    rotation: tuple[int, ...]
    origin: tuple[int, ...]
    outer_dart: Optional[int] = None
    faces: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    face_of: tuple[int, ...] = field(init=False, repr=False, compare=False)
    edges: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)
    edge_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "twin", tuple(self.twin))
        object.__setattr__(self, "rotation", tuple(self.rotation))
        object.__setattr__(self, "origin", tuple(self.origin))
        self._validate()
        if not self.twin:
            object.__setattr__(self, "faces", ((),))
            object.__setattr__(self, "face_of", ())
            object.__setattr__(self, "edges", ())
            object.__setattr__(self, "edge_of", ())
            object.__setattr__(self, "outer_dart", None)
            return
        faces, face_of = _trace_faces(self.twin, self.rotation)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "face_of", face_of)
        edges = []
        edge_of = [0] * len(self.twin)
        for d, t in enumerate(self.twin):
            if d < t:
                edge_of[d] = edge_of[t] = len(edges)
                edges.append((d, t))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "edge_of", tuple(edge_of))
        v, e, f = self.vertex_count, len(edges), len(faces)
        if v - e + f != 2:
            raise NonPlanarRotation(f"V - E + F = {v} - {e} + {f} != 2")
        if self.outer_dart is None:
            object.__setattr__(self, "outer_dart", 0)
        elif not 0 <= self.outer_dart < len(self.twin):
            raise MissingElement(f"outer dart {self.outer_dart} does not exist")

    def _validate(self) -> None:
        n = len(self.twin)
        if len(self.rotation) != n or len(self.origin) != n:
            raise GraphError("twin, rotation and origin must have equal length")
        if self.vertex_count < 1:
            raise GraphError("a plane graph needs at least one vertex")
        if n == 0:
            if self.vertex_count != 1:
                raise Disconnected("isolated vertices")
            object.__setattr__(self, "_first_dart", (-1,))
            return
        for d in range(n):
            t = self.twin[d]
            if not 0 <= t < n or t == d or self.twin[t] != d:
                raise GraphError(f"twin is not a fixed-point-free involution at dart {d}")
            if not 0 <= self.origin[d] < self.vertex_count:
                raise GraphError(f"dart {d} has origin out of range")
        first = [-1] * self.vertex_count
        for d in range(n - 1, -1, -1):
            first[self.origin[d]] = d
        object.__setattr__(self, "_first_dart", tuple(first))
        if sorted(self.rotation) != list(range(n)):
            raise GraphError("rotation is not a permutation of the darts")
        for d in range(n):
            if self.origin[self.rotation[d]] != self.origin[d]:
                raise GraphError(f"rotation moves dart {d} to another vertex")
        if len(set(self.origin)) != self.vertex_count:
            raise Disconnected("some vertex has no darts")
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for d in self.vertex_darts(u):
                w = self.origin[self.twin[d]]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != self.vertex_count:
            raise Disconnected(f"only {len(seen)} of {self.vertex_count} vertices reachable")

    # -- sizes -------------------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self.twin)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def outer_face(self) -> int:
        return 0 if self.outer_dart is None else self.face_of[self.outer_dart]

    def elements(self) -> list[ElementRef]:
        """All vertices then all faces."""
        return [ElementRef("v", v) for v in range(self.vertex_count)] + [
            ElementRef("f", f) for f in range(self.face_count)
        ]

    # -- local structure ---------------------------------------------------

    def darts(self) -> Iterator[Dart]:
        for d in range(self.dart_count):
            yield Dart(d, self.twin[d], self.rotation[d], self.origin[d])

    def vertex_darts(self, v: int) -> list[int]:
        """Darts leaving ``v`` in counterclockwise order, from the smallest."""
        if not 0 <= v < self.vertex_count:
            raise MissingElement(f"no vertex {v}")
        start = self._first_dart[v]
        if start < 0:
            return []
        out = [start]
        d = self.rotation[start]
        while d != start:
            out.append(d)
            d = self.rotation[d]
        return out

    def degree(self, v: int) -> int:
        return len(self.vertex_darts(v))

    def target(self, d: int) -> int:
        return self.origin[self.twin[d]]

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        if not 0 <= e < self.edge_count:
            raise MissingElement(f"no edge {e}")
        d, t = self.edges[e]
        return self.origin[d], self.origin[t]

    def edge_between(self, u: int, v: int) -> int:
        """Smallest edge id joining ``u`` and ``v``."""
        found = [self.edge_of[d] for d in self.vertex_darts(u) if self.target(d) == v]
        if not found:
            raise MissingElement(f"no edge between {u} and {v}")
        return min(found)

    def face_vertices(self, f: int) -> list[int]:
        """Vertices along the boundary walk of face ``f`` (with repeats)."""
        if not 0 <= f < self.face_count:
            raise MissingElement(f"no face {f}")
        if self.dart_count == 0:
            return [0]
        return [self.origin[d] for d in self.faces[f]]

    def face_edges(self, f: int) -> list[int]:
        return [self.edge_of[d] for d in self.faces[f]]

    def neighbors(self, v: int) -> list[int]:
        """Vertex neighbors of ``v`` in rotation order (with repeats for multi-edges)."""
        return [self.target(d) for d in self.vertex_darts(v)]

    def edge_list(self) -> list[tuple[int, int]]:
        return [(self.origin[d], self.origin[t]) for d, t in self.edges]


def _trace_faces(twin: Sequence[int], rotation: Sequence[int]):
    face_of = [-1] * len(twin)
    faces = []
    for start in range(len(twin)):
        if face_of[start] >= 0:
            continue
        fid = len(faces)
        walk = []
        d = start
        while face_of[d] < 0:
            face_of[d] = fid
            walk.append(d)
            d = rotation[twin[d]]
        faces.append(tuple(walk))
    return tuple(faces), tuple(face_of)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def from_rotation_system(
    rotations: Sequence[Sequence[int]],
    twin: Optional[Sequence[int]] = None,
    outer: Optional[int] = None,
) -> PlaneGraph:
    """Build a plane graph from per-vertex cyclic dart orders.

    Args:
        rotations: ``rotations[v]`` lists the darts leaving ``v`` in
            counterclockwise order. Together they must use every dart id
            ``0..D-1`` exactly once.
        twin: Twin of each dart. Defaults to pairing ``2k`` with ``2k+1``.
        outer: A dart on the face to designate as outer. Defaults to dart 0.
    """
    count = sum(len(r) for r in rotations)
    origin = [-1] * count
    rotation = [-1] * count
    for v, darts in enumerate(rotations):
        for i, d in enumerate(darts):
            if not 0 <= d < count or origin[d] >= 0:
                raise GraphError(f"dart {d} is out of range or listed twice")
            origin[d] = v
            rotation[d] = darts[(i + 1) % len(darts)]
    if twin is None:
        twin = [d ^ 1 for d in range(count)]
    return PlaneGraph(len(rotations), tuple(twin), tuple(rotation), tuple(origin), outer)


def from_neighbor_rotation(
    rotations: Sequence[Sequence[int]], outer: Optional[tuple[int, int]] = None
) -> PlaneGraph:
    """Build a simple plane graph from counterclockwise neighbor orders.

    Darts are numbered in reading order of ``rotations``. ``outer`` is a
    directed edge ``(u, v)`` whose dart lies on the outer face.
    """
    dart_id = {}
    dart_rot = []
    for u, nbrs in enumerate(rotations):
        ids = []
        for w in nbrs:
            if (u, w) in dart_id:
                raise GraphError(f"parallel edge {u}-{w}; use from_rotation_system")
            dart_id[(u, w)] = len(dart_id)
            ids.append(dart_id[(u, w)])
        dart_rot.append(ids)
    twin = [0] * len(dart_id)
    for (u, w), d in dart_id.items():
        if (w, u) not in dart_id:
            raise GraphError(f"edge {u}-{w} missing from the rotation of {w}")
        twin[d] = dart_id[(w, u)]
    outer_dart = None if outer is None else dart_id[outer]
    return from_rotation_system(dart_rot, twin, outer_dart)


@dataclass(frozen=True)
class WheelLabeling:
    """Standard labels of a wheel: hub ``x0``, outer face ``f0``, rim ``x_i``, inner faces ``f_i``.

    ``rim_vertices[i-1]`` is ``x_i`` and ``inner_faces[i-1]`` is ``f_i``;
    ``x_i`` is incident to ``f_i`` and ``f_{i+1}`` (indices mod ``n-1``).
    """

    hub: int
    outer: int
    rim_vertices: tuple[int, ...]
    inner_faces: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rim_vertices) + 1

    def sigma(self) -> list[ElementRef]:
        """The cyclic order f1, x1, f2, x2, ..., f_{n-1}, x_{n-1}."""
        out = []
        for f, x in zip(self.inner_faces, self.rim_vertices):
            out.append(ElementRef("f", f))
            out.append(ElementRef("v", x))
        return out

    def check(self, g: PlaneGraph) -> None:
        """Raise ``GraphError`` unless the incidence pattern holds in ``g``."""
        k = len(self.rim_vertices)
        for i in range(k):
            x = self.rim_vertices[i]
            for f in (self.inner_faces[i], self.inner_faces[(i + 1) % k]):
                if x not in g.face_vertices(f):
                    raise GraphError(f"rim vertex {x} not incident to face {f}")


@lru_cache(maxsize=128)
def build_wheel(n: int) -> tuple[PlaneGraph, WheelLabeling]:
    """The wheel ``W_n``: a rim cycle on ``n-1`` vertices plus a hub.

    Labels: hub is vertex 0, ``x_i`` is vertex ``i``, the outer face is face 0
    and ``f_i`` (the triangle on hub, ``x_{i-1}``, ``x_i``) is face ``i``.
    """
    if n < 4:
        raise ValueError(f"wheels need n >= 4, got {n}")
    k = n - 1

    def rim_fwd(i):  # x_i -> x_{i+1}
        return 0 if i == 1 else n + i - 2

    def rim_back(i):  # x_{i+1} -> x_i
        return 2 * n - 2 + i - 1

    def spoke_in(i):  # x_i -> hub
        return 3 * n - 3 + i - 1

    twin = [0] * (4 * k)
    for i in range(1, n):
        twin[i] = spoke_in(i)
        twin[spoke_in(i)] = i
        twin[rim_fwd(i)] = rim_back(i)
        twin[rim_back(i)] = rim_fwd(i)
    rotations = [list(range(1, n))]
    for i in range(1, n):
        prev = i - 1 if i > 1 else k
        rotations.append([rim_fwd(i), spoke_in(i), rim_back(prev)])
    g = from_rotation_system(rotations, twin, outer=0)
    lab = WheelLabeling(0, 0, tuple(range(1, n)), tuple(range(1, n)))
    return g, lab


def build_cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    twin = [0] * (2 * n)
    for i in range(n):
        twin[i] = n + i
        twin[n + i] = i
    # dart i: i -> i+1 ; dart n+i: i+1 -> i
    rotations = [[i, n + (i - 1) % n] for i in range(n)]
    return from_rotation_system(rotations, twin, outer=0)


def build_triple_edge() -> PlaneGraph:
    """Two vertices joined by three parallel edges (three bigon faces)."""
    return from_rotation_system([[0, 2, 4], [1, 5, 3]])


def build_prism() -> PlaneGraph:
    """The triangular prism: outer triangle 0,1,2, inner triangle 3,4,5, rungs i--i+3."""
    rot = []
    for i in range(3):
        rot.append([(i + 1) % 3, i + 3, (i - 1) % 3])
    for i in range(3):
        rot.append([i, (i + 1) % 3 + 3, (i - 1) % 3 + 3])
    return from_neighbor_rotation(rot, outer=(0, 1))


def build_k4_minus_edge() -> PlaneGraph:
    """``K_4`` drawn as ``W_4`` with the rim edge ``x3 x1`` removed.

    The removal merges the outer face with the triangle ``x0 x3 x1``, so the
    outer face is the 4-cycle ``x0 x1 x2 x3`` and face 1 is ``x0 x1 x2``.
    """
    w4, _ = build_wheel(4)
    g, _ = delete_elements(w4, edges=[w4.edge_between(3, 1)])
    return g


def k4_minus_edge_labels(g: PlaneGraph) -> dict[str, ElementRef]:
    """Names used for ``build_k4_minus_edge``: x0..x3, the triangle f2, the outer face f'."""
    hub_to_x2 = next(d for d in g.vertex_darts(0) if g.target(d) == 2)
    return {
        "x0": ElementRef("v", 0),
        "x1": ElementRef("v", 1),
        "x2": ElementRef("v", 2),
        "x3": ElementRef("v", 3),
        "f2": ElementRef("f", g.face_of[hub_to_x2]),
        "f'": ElementRef("f", g.outer_face),
    }


NAMED_KINDS = ("cycle", "triple_edge", "halin_prism", "k4_minus_edge")


def build_named(kind: str, n: Optional[int] = None) -> PlaneGraph:
    if kind == "cycle":
        if n is None:
            raise ValueError("cycle needs n")
        return build_cycle(n)
    if kind == "triple_edge":
        return build_triple_edge()
    if kind == "halin_prism":
        return build_prism()
    if kind == "k4_minus_edge":
        return build_k4_minus_edge()
    raise ValueError(f"unknown kind {kind!r}; expected one of {NAMED_KINDS}")


# ---------------------------------------------------------------------------
# Derived graphs
# ---------------------------------------------------------------------------


def dual(g: PlaneGraph) -> tuple[PlaneGraph, dict[ElementRef, ElementRef]]:
    """Dual graph and the vertex/face exchange.

    Dual darts reuse the primal dart ids: dart ``d`` of the dual leaves the
    dual vertex of ``face_of[d]`` and rotates like the primal face walk. The
    dual's faces are then the primal rotation orbits, and ``dual(dual(g))``
    has exactly the rotation of ``g``.

    Returns:
        ``(g_star, to_dual)`` where ``to_dual`` maps every vertex of ``g`` to
        a face of ``g_star`` and every face of ``g`` to a vertex of ``g_star``.
    """
    if g.dart_count == 0:
        h = PlaneGraph(1, (), (), ())
        return h, {ElementRef("v", 0): ElementRef("f", 0), ElementRef("f", 0): ElementRef("v", 0)}
    rotation = tuple(g.rotation[g.twin[d]] for d in range(g.dart_count))
    h = PlaneGraph(g.face_count, g.twin, rotation, g.face_of, g.outer_dart)
    to_dual = {}
    for f in range(g.face_count):
        to_dual[ElementRef("f", f)] = ElementRef("v", f)
    for v in range(g.vertex_count):
        to_dual[ElementRef("v", v)] = ElementRef("f", h.face_of[g.vertex_darts(v)[0]])
    return h, to_dual


def reroot_outer_face(g: PlaneGraph, f: int) -> PlaneGraph:
    if not 0 <= f < g.face_count:
        raise MissingElement(f"no face {f}")
    if g.dart_count == 0:
        return g
    return PlaneGraph(g.vertex_count, g.twin, g.rotation, g.origin, g.faces[f][0])


def subdivide_edge(g: PlaneGraph, e: int) -> tuple[PlaneGraph, int, dict[ElementRef, ElementRef]]:
    """Replace edge ``e = uv`` by a path ``u x v``.

    The two old darts keep their ids and positions (now ``u->x`` and
    ``v->x``); the new darts ``x->v`` and ``x->u`` get the next two ids.
    Faces keep their ids since every face keeps its smallest dart.
    """
    if not 0 <= e < g.edge_count:
        raise MissingElement(f"no edge {e}")
    d, t = g.edges[e]
    m = g.dart_count
    x = g.vertex_count
    x_to_v, x_to_u = m, m + 1
    twin = list(g.twin) + [t, d]
    twin[d] = x_to_u
    twin[t] = x_to_v
    rotation = list(g.rotation) + [x_to_u, x_to_v]
    origin = list(g.origin) + [x, x]
    h = PlaneGraph(g.vertex_count + 1, twin, rotation, origin, g.outer_dart)
    mapping = {ElementRef("v", v): ElementRef("v", v) for v in range(g.vertex_count)}
    for f, walk in enumerate(g.faces):
        mapping[ElementRef("f", f)] = ElementRef("f", h.face_of[walk[0]])
    return h, x, mapping


def duplicate_edge(g: PlaneGraph, e: int) -> PlaneGraph:
    """Add a parallel copy of ``e`` next to it, forming a bigon."""
    if not 0 <= e < g.edge_count:
        raise MissingElement(f"no edge {e}")
    d, t = g.edges[e]
    m = g.dart_count
    a, b = m, m + 1  # a: parallel to d, b: parallel to t
    twin = list(g.twin) + [b, a]
    rotation = list(g.rotation) + [-1, -1]
    # b right after t and a right before d: the bigon walk is d, b.
    rotation[b] = rotation[t]
    rotation[t] = b
    p = rotation.index(d)
    rotation[p] = a
    rotation[a] = d
    origin = list(g.origin) + [g.origin[d], g.origin[t]]
    return PlaneGraph(g.vertex_count, twin, rotation, origin, g.outer_dart)


def stellate_face(g: PlaneGraph, f: int) -> PlaneGraph:
    """Insert a vertex in face ``f`` joined to every corner of its walk."""
    if not 0 <= f < g.face_count:
        raise MissingElement(f"no face {f}")
    walk = g.faces[f]
    if not walk:
        raise GraphError("cannot stellate the face of an edgeless graph")
    k = len(walk)
    m = g.dart_count
    s = g.vertex_count
    spoke_out = [m + 2 * i for i in range(k)]  # corner vertex u_i -> s
    spoke_in = [m + 2 * i + 1 for i in range(k)]  # s -> u_i
    twin = list(g.twin) + [0] * (2 * k)
    rotation = list(g.rotation) + [0] * (2 * k)
    origin = list(g.origin) + [0] * (2 * k)
    for i, d in enumerate(walk):
        a, b = spoke_out[i], spoke_in[i]
        twin[a], twin[b] = b, a
        origin[a] = g.origin[d]
        origin[b] = s
        arrive = g.twin[walk[i - 1]]  # dart at u_i preceding the corner
        rotation[arrive] = a
        rotation[a] = d
        rotation[b] = spoke_in[(i - 1) % k]
    return PlaneGraph(g.vertex_count + 1, twin, rotation, origin, g.outer_dart)


@dataclass(frozen=True)
class SubgraphEmbedding:
    """How a subgraph sits inside its host: vertex and dart ids of the host."""

    vertex_map: tuple[int, ...]
    dart_map: tuple[int, ...]

    def edge_map(self, g: PlaneGraph, host: PlaneGraph) -> list[int]:
        return [host.edge_of[self.dart_map[d]] for d, _ in g.edges]

    def compose(self, outer: "SubgraphEmbedding") -> "SubgraphEmbedding":
        return SubgraphEmbedding(
            tuple(outer.vertex_map[v] for v in self.vertex_map),
            tuple(outer.dart_map[d] for d in self.dart_map),
        )


def delete_elements(
    g: PlaneGraph, vertices: Iterable[int] = (), edges: Iterable[int] = ()
) -> tuple[PlaneGraph, SubgraphEmbedding]:
    """Delete vertices (with their edges) and edges, keeping the embedding.

    Surviving vertices and darts are renumbered in increasing order. The outer
    face is the face containing the first surviving dart of the old outer
    walk.

    Raises:
        MissingElement: On an unknown vertex or edge.
        WouldDisconnect: If the result would be empty or disconnected.
    """
    gone_v = set(vertices)
    for v in gone_v:
        if not 0 <= v < g.vertex_count:
            raise MissingElement(f"no vertex {v}")
    gone_d = set()
    for e in edges:
        if not 0 <= e < g.edge_count:
            raise MissingElement(f"no edge {e}")
        gone_d.update(g.edges[e])
    for d in range(g.dart_count):
        if g.origin[d] in gone_v:
            gone_d.add(d)
            gone_d.add(g.twin[d])
    kept_v = [v for v in range(g.vertex_count) if v not in gone_v]
    kept_d = [d for d in range(g.dart_count) if d not in gone_d]
    if not kept_v:
        raise WouldDisconnect("deletion leaves no vertices")
    new_v = {v: i for i, v in enumerate(kept_v)}
    new_d = {d: i for i, d in enumerate(kept_d)}
    twin, rotation, origin = [], [], []
    for d in kept_d:
        twin.append(new_d[g.twin[d]])
        nxt = g.rotation[d]
        while nxt in gone_d:
            nxt = g.rotation[nxt]
        rotation.append(new_d[nxt])
        origin.append(new_v[g.origin[d]])
    outer = None
    if kept_d and g.outer_dart is not None:
        for d in g.faces[g.outer_face]:
            if d in new_d:
                outer = new_d[d]
                break
    try:
        h = PlaneGraph(len(kept_v), twin, rotation, origin, outer)
    except Disconnected as exc:
        raise WouldDisconnect(str(exc)) from None
    return h, SubgraphEmbedding(tuple(kept_v), tuple(kept_d))


def delete_element(g: PlaneGraph, *, vertex: Optional[int] = None, edge: Optional[int] = None) -> PlaneGraph:
    if (vertex is None) == (edge is None):
        raise ValueError("give exactly one of vertex= or edge=")
    if vertex is not None:
        return delete_elements(g, vertices=[vertex])[0]
    return delete_elements(g, edges=[edge])[0]


# ---------------------------------------------------------------------------
# Comparison
# ---------------------------------------------------------------------------


def plane_isomorphism(
    a: PlaneGraph,
    b: PlaneGraph,
    seed: Optional[tuple[int, int]] = None,
    mirror: Optional[bool] = None,
) -> Optional[tuple[dict[int, int], bool]]:
    """Find a dart bijection preserving twins and rotations.

    With ``mirror`` the rotation of ``b`` is read clockwise, which matches
    reflected drawings. ``seed`` pins the image of one dart of ``a``.

    Returns:
        ``(dart_map, mirrored)`` or ``None``.
    """
    if (a.vertex_count, a.dart_count, a.face_count) != (b.vertex_count, b.dart_count, b.face_count):
        return None
    if a.dart_count == 0:
        return {}, False
    inv_b = [0] * b.dart_count
    for d, r in enumerate(b.rotation):
        inv_b[r] = d
    orientations = [False, True] if mirror is None else [mirror]
    for mir in orientations:
        rot_b = inv_b if mir else b.rotation
        if seed is not None:
            starts = [seed]
        else:
            starts = [(0, e) for e in range(b.dart_count)]
        for d0, e0 in starts:
            mapping = _propagate(a, b, rot_b, d0, e0)
            if mapping is not None:
                return mapping, mir
    return None


def _propagate(a, b, rot_b, d0, e0):
    mapping = {d0: e0}
    used = {e0}
    stack = [d0]
    while stack:
        d = stack.pop()
        e = mapping[d]
        for nd, ne in ((a.twin[d], b.twin[e]), (a.rotation[d], rot_b[e])):
            if nd in mapping:
                if mapping[nd] != ne:
                    return None
            else:
                if ne in used:
                    return None
                mapping[nd] = ne
                used.add(ne)
                stack.append(nd)
    if len(mapping) != a.dart_count:
        return None
    return mapping


def element_map_from_darts(
    a: PlaneGraph, b: PlaneGraph, dart_map: Mapping[int, int], mirrored: bool = False
) -> dict[ElementRef, ElementRef]:
    """Vertex and face correspondence induced by a dart isomorphism."""
    if a.dart_count == 0:
        return {ElementRef("v", 0): ElementRef("v", 0), ElementRef("f", 0): ElementRef("f", 0)}
    out = {}
    for d, e in dart_map.items():
        out[ElementRef("v", a.origin[d])] = ElementRef("v", b.origin[e])
        fe = b.face_of[b.twin[e]] if mirrored else b.face_of[e]
        out[ElementRef("f", a.face_of[d])] = ElementRef("f", fe)
    return out


def contract_subdivision(h: PlaneGraph, branch: Iterable[int]) -> tuple[PlaneGraph, list[int], list[int]]:
    """Suppress every non-branch vertex of ``h``; each must have degree 2.

    Returns:
        ``(k, vertex_of, dart_of)``: the contracted graph, the ``h`` vertex
        of every ``k`` vertex, and for every ``k`` dart the first ``h`` dart
        of the path it stands for. Face ``face_of[d]`` in ``k`` corresponds to
        ``h.face_of[dart_of[d]]``.

    Raises:
        GraphError: If a non-branch vertex does not have degree 2 or some
            cycle avoids the branch vertices.
    """
    branch = sorted(set(branch))
    is_branch = [False] * h.vertex_count
    for v in branch:
        is_branch[v] = True
    for v in range(h.vertex_count):
        if not is_branch[v] and h.degree(v) != 2:
            raise GraphError(f"vertex {v} is not a degree-2 subdivision vertex")
    starts = [d for d in range(h.dart_count) if is_branch[h.origin[d]]]
    new_id = {d: i for i, d in enumerate(starts)}
    new_v = {v: i for i, v in enumerate(branch)}
    twin = [0] * len(starts)
    covered = 0
    for d in starts:
        cur = d
        covered += 1
        while not is_branch[h.target(cur)]:
            cur = h.rotation[h.twin[cur]]
            covered += 1
        twin[new_id[d]] = new_id[h.twin[cur]]
    if covered != h.dart_count:
        raise GraphError("some cycle of the graph avoids the branch vertices")
    rotation = [new_id[h.rotation[d]] for d in starts]
    origin = [new_v[h.origin[d]] for d in starts]
    outer = None
    if starts and h.outer_dart is not None:
        outer_face = h.outer_face
        outer = next((new_id[d] for d in starts if h.face_of[d] == outer_face), 0)
    k = PlaneGraph(len(branch), twin, rotation, origin, outer)
    return k, branch, starts
