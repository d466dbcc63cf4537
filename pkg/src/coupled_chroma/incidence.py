"""Vertex-face incidence graphs and coupled-coloring validity.

A coupled coloring of a plane graph is a proper coloring of its incidence
graph ``X(G)``: one node per vertex and per face, joined when two vertices are
adjacent, two faces share an edge, or a vertex lies on a face. Lists and
colorings are plain mappings from nodes to color sets and colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Hashable, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import MissingNode
from .plane_graph import ElementRef, PlaneGraph, WheelLabeling

ListAssignment = Mapping[Hashable, Collection[int]]
CoupledColoring = Mapping[Hashable, int]


class IncidenceGraph:
    """Simple undirected graph on hashable nodes with a fixed node order.

    The node order is the tie-break order for solvers and for reporting
    violations. ``adj[i]`` holds the sorted neighbor indices of ``nodes[i]``.
    """

    __slots__ = ("nodes", "index", "adj", "labeling", "sigma")

    def __init__(
        self,
        nodes: Sequence[Hashable],
        edges: Iterable[tuple[Hashable, Hashable]],
        labeling: Optional[WheelLabeling] = None,
        sigma: Optional[Sequence[Hashable]] = None,
    ):
        self.nodes = tuple(nodes)
        self.index = {node: i for i, node in enumerate(self.nodes)}
        if len(self.index) != len(self.nodes):
            raise ValueError("duplicate nodes")
        nbrs: list[set[int]] = [set() for _ in self.nodes]
        for a, b in edges:
            i, j = self.index[a], self.index[b]
            if i != j:
                nbrs[i].add(j)
                nbrs[j].add(i)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.labeling = labeling
        self.sigma = None if sigma is None else tuple(sigma)

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, node) -> bool:
        return node in self.index

    def __repr__(self) -> str:
        return f"IncidenceGraph(nodes={len(self.nodes)}, edges={self.number_of_edges()})"

    def neighbors(self, node) -> list:
        return [self.nodes[j] for j in self.adj[self.index[node]]]

    def degree(self, node) -> int:
        return len(self.adj[self.index[node]])

    def has_edge(self, a, b) -> bool:
        return self.index[b] in self.adj[self.index[a]]

    def edges(self) -> Iterator[tuple]:
        for i, row in enumerate(self.adj):
            for j in row:
                if i < j:
                    yield self.nodes[i], self.nodes[j]

    def number_of_edges(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edge_set(self) -> set[frozenset]:
        return {frozenset(e) for e in self.edges()}

    def subgraph(self, keep: Iterable, sigma: Optional[Sequence] = None) -> "IncidenceGraph":
        keep = set(keep)
        nodes = [v for v in self.nodes if v in keep]
        edges = [(a, b) for a, b in self.edges() if a in keep and b in keep]
        if sigma is None and self.sigma is not None:
            sigma = [v for v in self.sigma if v in keep]
        return IncidenceGraph(nodes, edges, sigma=sigma)

    def without(self, drop: Iterable) -> "IncidenceGraph":
        drop = set(drop)
        return self.subgraph(v for v in self.nodes if v not in drop)

    def relabel(self, mapping: Mapping) -> "IncidenceGraph":
        return IncidenceGraph(
            [mapping[v] for v in self.nodes], [(mapping[a], mapping[b]) for a, b in self.edges()]
        )

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in self.adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.nodes)

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(self.nodes)
        h.add_edges_from(self.edges())
        return h


def build_incidence_graph(g: PlaneGraph) -> IncidenceGraph:
    """``X(G)`` with nodes ``v:0..`` followed by ``f:0..``."""
    nodes = g.elements()
    if g.dart_count == 0:
        return IncidenceGraph(nodes, [(nodes[0], nodes[1])])
    V = [ElementRef("v", v) for v in range(g.vertex_count)]
    F = [ElementRef("f", f) for f in range(g.face_count)]
    edges = []
    for d in range(g.dart_count):
        t = g.twin[d]
        if d < t:
            edges.append((V[g.origin[d]], V[g.origin[t]]))
            edges.append((F[g.face_of[d]], F[g.face_of[t]]))
        edges.append((V[g.origin[d]], F[g.face_of[d]]))
    return IncidenceGraph(nodes, edges)


def build_Xn(w: PlaneGraph, lab: WheelLabeling) -> IncidenceGraph:
    """The 4-regular graph on the rim vertices and inner faces of a wheel.

    Built from the labeling alone: ``x_i x_{i+1}`` along the rim,
    ``f_i f_{i+1}`` across the spoke ``x0 x_i``, and ``x_i`` on ``f_i`` and
    ``f_{i+1}``. Node order is ``x_1..x_{n-1}, f_1..f_{n-1}``; ``sigma`` is the
    cyclic order ``f_1, x_1, f_2, x_2, ...``.
    """
    n = lab.n
    if n < 5:
        raise ValueError(f"X_n needs n >= 5, got {n}")
    if w.vertex_count != n or w.face_count != n:
        raise ValueError("labeling does not match the wheel")
    k = n - 1
    xs = [ElementRef("v", v) for v in lab.rim_vertices]
    fs = [ElementRef("f", f) for f in lab.inner_faces]
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges.append((xs[i], xs[j]))
        edges.append((fs[i], fs[j]))
        edges.append((xs[i], fs[i]))
        edges.append((xs[i], fs[j]))
    return IncidenceGraph(xs + fs, edges, labeling=lab, sigma=lab.sigma())


@dataclass(frozen=True)
class Violation:
    """First reason a coloring is not a valid coupled coloring.

    ``nodes`` has one entry when a color is outside its list and two when
    adjacent nodes share ``color``.
    """

    nodes: tuple
    color: int

    def __str__(self) -> str:
        names = " ".join(str(v) for v in self.nodes)
        if len(self.nodes) == 1:
            return f"{names} colored {self.color}, which is not in its list"
        return f"{names} both colored {self.color}"


def verify_coupled_coloring(
    x: IncidenceGraph, lists: ListAssignment, coloring: CoupledColoring
) -> Optional[Violation]:
    """Return ``None`` if ``coloring`` is valid, else the first violation.

    List membership is checked for every node before any edge, both in node
    order; edges are scanned in lexicographic order of node positions.

    Raises:
        MissingNode: If some node of ``x`` has no color.
    """
    colors = []
    for node in x.nodes:
        try:
            colors.append(coloring[node])
        except KeyError:
            raise MissingNode(node) from None
    for node, c in zip(x.nodes, colors):
        if c not in lists[node]:
            return Violation((node,), c)
    for i, row in enumerate(x.adj):
        ci = colors[i]
        for j in row:
            if j > i and colors[j] == ci:
                return Violation((x.nodes[i], x.nodes[j]), ci)
    return None


def is_valid(x: IncidenceGraph, lists: ListAssignment, coloring: CoupledColoring) -> bool:
    return verify_coupled_coloring(x, lists, coloring) is None


def uniform_lists(x: IncidenceGraph, colors: Iterable[int]) -> dict:
    palette = frozenset(colors)
    return {node: palette for node in x.nodes}
