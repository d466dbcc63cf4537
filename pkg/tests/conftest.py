import itertools

import hypothesis.strategies as st
import networkx as nx
import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from coupled_chroma.plane_graph import (
    PlaneGraph,
    build_cycle,
    build_k4_minus_edge,
    build_prism,
    build_triple_edge,
    build_wheel,
    duplicate_edge,
    from_rotation_system,
    stellate_face,
    subdivide_edge,
)
from coupled_chroma.wheel import random_wheel_subgraph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def loop_graph() -> PlaneGraph:
    return from_rotation_system([[0, 1]])


def bridge_graph() -> PlaneGraph:
    return from_rotation_system([[0], [1]])


def corpus() -> dict:
    """Named plane graphs used across tests."""
    graphs = {
        "loop": loop_graph(),
        "bridge": bridge_graph(),
        "bigon": duplicate_edge(bridge_graph(), 0),
        "triple_edge": build_triple_edge(),
        "prism": build_prism(),
        "k4_minus_edge": build_k4_minus_edge(),
        "k5_minus_edge": stellate_face(build_k4_minus_edge(), build_k4_minus_edge().outer_face),
    }
    for k in range(3, 7):
        graphs[f"cycle{k}"] = build_cycle(k)
    for n in range(4, 9):
        graphs[f"W{n}"] = build_wheel(n)[0]
    w5 = build_wheel(5)[0]
    graphs["W5_subdivided"] = subdivide_edge(w5, 1)[0]
    graphs["W5_doubled"] = duplicate_edge(w5, 0)
    return graphs


def to_multigraph(g: PlaneGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edge_list())
    return h


def naive_incidence_edges(g: PlaneGraph) -> set:
    """X(G) edges from vertex pairs, face boundary edge sets and face vertex sets."""
    out = set()
    for u, v in g.edge_list():
        if u != v:
            out.add(frozenset({("v", u), ("v", v)}))
    face_edges = [set(g.edge_of[d] for d in walk) for walk in g.faces]
    for f1, f2 in itertools.combinations(range(g.face_count), 2):
        if face_edges[f1] & face_edges[f2]:
            out.add(frozenset({("f", f1), ("f", f2)}))
    for f, walk in enumerate(g.faces):
        for d in walk:
            out.add(frozenset({("v", g.origin[d]), ("f", f)}))
    if g.dart_count == 0:
        out.add(frozenset({("v", 0), ("f", 0)}))
    return out


def brute_force_count(x, lists) -> int:
    nodes = list(x.nodes)
    edges = [(x.index[a], x.index[b]) for a, b in x.edges()]
    total = 0
    for combo in itertools.product(*(sorted(lists[y]) for y in nodes)):
        if all(combo[i] != combo[j] for i, j in edges):
            total += 1
    return total


@st.composite
def plane_graphs(draw, max_n: int = 9, max_edits: int = 3):
    """Connected plane multigraphs: wheel subgraphs followed by random local edits."""
    n = draw(st.integers(4, max_n))
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    g = random_wheel_subgraph(n, rng)[0]
    for _ in range(draw(st.integers(0, max_edits))):
        op = int(rng.integers(3))
        if op == 0 and g.edge_count:
            g = subdivide_edge(g, int(rng.integers(g.edge_count)))[0]
        elif op == 1 and g.edge_count:
            g = duplicate_edge(g, int(rng.integers(g.edge_count)))
        else:
            g = stellate_face(g, int(rng.integers(g.face_count)))
    return g


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
