import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from coupled_chroma.errors import BoundViolated, PreconditionViolated
from coupled_chroma.incidence import IncidenceGraph, build_incidence_graph, build_Xn, uniform_lists, verify_coupled_coloring
from coupled_chroma.plane_graph import build_cycle, build_prism, build_wheel
from coupled_chroma.solver import (
    DEFAULT_BUDGET,
    Status,
    color_strip,
    count_colorings,
    default_budget,
    degree_choosable_color,
    exact_color,
)

from conftest import brute_force_count, corpus


def from_nx(h: nx.Graph) -> IncidenceGraph:
    return IncidenceGraph(sorted(h.nodes), h.edges)


@st.composite
def small_graphs_with_lists(draw, max_nodes=8, palette=4):
    n = draw(st.integers(1, max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    colors = st.frozensets(st.integers(1, palette), min_size=1)
    lists = {i: draw(colors) for i in range(n)}
    return IncidenceGraph(range(n), edges), lists


# --- exact_color ----------------------------------------------------------------


def test_k4_colorable_with_four():
    x = build_incidence_graph(build_wheel(4)[0])
    out = exact_color(x, uniform_lists(x, range(1, 5)))
    assert out.status is Status.COLORED and out.colored
    assert verify_coupled_coloring(x, uniform_lists(x, range(1, 5)), out.coloring) is None


def test_w5_not_four_colorable():
    x = build_incidence_graph(build_wheel(5)[0])
    assert exact_color(x, uniform_lists(x, range(1, 5)), budget=0).status is Status.UNSAT


def test_prism_needs_six():
    x = build_incidence_graph(build_prism())
    assert exact_color(x, uniform_lists(x, range(1, 6)), budget=0).status is Status.UNSAT
    out = exact_color(x, uniform_lists(x, range(1, 7)), budget=0)
    assert out.colored and verify_coupled_coloring(x, uniform_lists(x, range(1, 7)), out.coloring) is None


def test_budget_aborts():
    x = build_incidence_graph(build_prism())
    out = exact_color(x, uniform_lists(x, range(1, 6)), budget=50)
    assert out.status is Status.ABORTED and out.coloring is None
    assert out.nodes_expanded == 51


def test_budget_env_override(monkeypatch):
    monkeypatch.delenv("COUPLED_CHROMA_BUDGET", raising=False)
    assert default_budget() == DEFAULT_BUDGET
    monkeypatch.setenv("COUPLED_CHROMA_BUDGET", "7")
    assert default_budget() == 7
    x = build_incidence_graph(build_prism())
    assert exact_color(x, uniform_lists(x, range(1, 6))).status is Status.ABORTED


def test_exact_is_deterministic():
    x = build_incidence_graph(build_wheel(7)[0])
    rng = np.random.default_rng(3)
    lists = {y: frozenset(rng.choice(np.arange(1, 9), 4, replace=False).tolist()) for y in x.nodes}
    a, b = exact_color(x, lists), exact_color(x, lists)
    assert (a.status, a.coloring, a.nodes_expanded) == (b.status, b.coloring, b.nodes_expanded)


@given(small_graphs_with_lists())
def test_exact_sound_and_complete(case):
    x, lists = case
    out = exact_color(x, lists, budget=0)
    total = brute_force_count(x, lists)
    if out.colored:
        assert verify_coupled_coloring(x, lists, out.coloring) is None
        assert total > 0
    else:
        assert out.status is Status.UNSAT and total == 0


# --- count_colorings -------------------------------------------------------------


def test_count_single_edge():
    x = IncidenceGraph(["a", "b"], [("a", "b")])
    assert count_colorings(x, {"a": {1, 2}, "b": {1, 2}}) == 2


def test_count_triangle_matches_enumeration():
    x = build_incidence_graph(build_cycle(3))
    lists = uniform_lists(x, range(1, 5))
    assert count_colorings(x, lists) == brute_force_count(x, lists) == 0
    lists = uniform_lists(x, range(1, 6))
    assert count_colorings(x, lists) == brute_force_count(x, lists) == 120


def test_count_w5_zero():
    x = build_incidence_graph(build_wheel(5)[0])
    assert count_colorings(x, uniform_lists(x, range(1, 5))) == 0


def test_count_cap():
    x = build_incidence_graph(build_cycle(3))
    assert count_colorings(x, uniform_lists(x, range(1, 6)), cap=7) == 7


@given(small_graphs_with_lists(max_nodes=6))
def test_count_matches_enumeration(case):
    x, lists = case
    assert count_colorings(x, lists) == brute_force_count(x, lists)


@pytest.mark.parametrize("name", sorted(k for k, g in corpus().items() if g.vertex_count + g.face_count <= 6))
@pytest.mark.parametrize("palette", [1, 2, 3, 4])
def test_count_matches_enumeration_on_small_corpus(name, palette):
    x = build_incidence_graph(corpus()[name])
    rng = np.random.default_rng(palette)
    assert count_colorings(x, uniform_lists(x, range(1, palette + 1))) == brute_force_count(
        x, uniform_lists(x, range(1, palette + 1))
    )
    for _ in range(20):
        lists = {y: frozenset(c for c in range(1, palette + 1) if rng.random() < 0.7) or {1} for y in x.nodes}
        assert count_colorings(x, lists) == brute_force_count(x, lists)


# --- degree_choosable_color ---------------------------------------------------------


def test_four_cycle_two_lists():
    x = from_nx(nx.cycle_graph(4))
    out = degree_choosable_color(x, {i: {1, 2} for i in range(4)})
    assert out.colored
    assert [out.coloring[i] for i in range(4)] in ([1, 2, 1, 2], [2, 1, 2, 1])


def test_x9_four_lists():
    w, lab = build_wheel(9)
    x = build_Xn(w, lab)
    lists = uniform_lists(x, range(1, 5))
    out = degree_choosable_color(x, lists)
    assert verify_coupled_coloring(x, lists, out.coloring) is None


@pytest.mark.parametrize(
    "graph",
    [nx.complete_graph(5), nx.cycle_graph(5), nx.disjoint_union(nx.path_graph(3), nx.path_graph(3))],
    ids=["complete", "odd_cycle", "disconnected"],
)
def test_degree_choosable_preconditions(graph):
    x = from_nx(graph)
    with pytest.raises(PreconditionViolated):
        degree_choosable_color(x, {i: set(range(1, 5)) for i in x.nodes})


def test_degree_choosable_short_list():
    x = from_nx(nx.cycle_graph(6))
    lists = {i: {1, 2} for i in range(6)}
    lists[3] = {1}
    with pytest.raises(PreconditionViolated):
        degree_choosable_color(x, lists)


def test_degree_choosable_branches():
    x = from_nx(nx.path_graph(4))
    assert degree_choosable_color(x, {i: {1, 2} for i in range(4)}).method == "slack"
    # removing a pair from C4 disconnects it, so only the search applies
    x = from_nx(nx.cycle_graph(4))
    assert degree_choosable_color(x, {i: {1, 2} for i in range(4)}).method == "exact"
    w, lab = build_wheel(9)
    xn = build_Xn(w, lab)
    assert degree_choosable_color(xn, uniform_lists(xn, range(1, 5))).method == "pair"
    # even cycle whose non-adjacent pairs share nothing, but neighbors' lists differ
    lists = {0: {1, 2}, 1: {3, 4}, 2: {5, 6}, 3: {7, 8}, 4: {1, 9}, 5: {3, 10}}
    x = from_nx(nx.cycle_graph(6))
    out = degree_choosable_color(x, lists)
    assert out.method in ("pair", "unequal")
    assert verify_coupled_coloring(x, lists, out.coloring) is None


def random_degree_instances(count, seed, max_nodes=14):
    rng = np.random.default_rng(seed)
    made = 0
    while made < count:
        n = int(rng.integers(3, max_nodes + 1))
        h = nx.gnp_random_graph(n, float(rng.uniform(0.2, 0.7)), seed=int(rng.integers(2**31)))
        if not nx.is_connected(h):
            continue
        degrees = [d for _, d in h.degree]
        if h.number_of_edges() == n * (n - 1) // 2:
            continue
        if all(d == 2 for d in degrees) and n % 2 == 1:
            continue
        delta = max(degrees)
        palette = delta + int(rng.integers(0, 3))
        lists = {
            v: frozenset((rng.choice(palette, delta, replace=False) + 1).tolist()) for v in h.nodes
        }
        made += 1
        yield from_nx(h), lists


def test_degree_choosable_random_suite():
    methods = {}
    for x, lists in random_degree_instances(10_000, seed=11):
        out = degree_choosable_color(x, lists)
        assert verify_coupled_coloring(x, lists, out.coloring) is None
        methods[out.method] = methods.get(out.method, 0) + 1
    assert methods.get("pair", 0) > 0


# --- color_strip ----------------------------------------------------------------


def strip_for(n):
    w, lab = build_wheel(n)
    xn = build_Xn(w, lab)
    order = list(xn.sigma[2:-2])  # drop f1, x1 at the front and f_{n-1}, x_{n-1} at the back
    return xn.subgraph(order, sigma=order), order


def test_strip_random_trials():
    rng = np.random.default_rng(6)
    strip, order = strip_for(6)
    for _ in range(500):
        lists = {y: frozenset((rng.choice(9, 3, replace=False) + 1).tolist()) for y in order}
        a, b = order[-2:]
        ca = min(lists[a])
        cb = min(lists[b] - {ca})
        out = color_strip(strip, lists, {a: ca, b: cb})
        assert verify_coupled_coloring(strip, lists, out.coloring) is None


def test_minimal_strip_agrees_with_exact():
    strip, order = strip_for(5)
    assert len(order) == 4
    rng = np.random.default_rng(8)
    for _ in range(100):
        lists = {y: frozenset((rng.choice(6, 3, replace=False) + 1).tolist()) for y in order}
        a, b = order[-2:]
        fixed = {a: min(lists[a]), b: min(lists[b] - {min(lists[a])})}
        out = color_strip(strip, lists, fixed)
        pinned = {**lists, **{y: {c} for y, c in fixed.items()}}
        assert verify_coupled_coloring(strip, pinned, out.coloring) is None
        assert exact_color(strip, pinned, budget=0).colored


def test_strip_short_list_rejected():
    strip, order = strip_for(7)
    lists = {y: {1, 2, 3} for y in order}
    lists[order[1]] = {1, 2}
    with pytest.raises(BoundViolated):
        color_strip(strip, lists, {order[-2]: 1, order[-1]: 2})


def test_strip_fixed_pair_checks():
    strip, order = strip_for(7)
    lists = {y: {1, 2, 3} for y in order}
    with pytest.raises(BoundViolated):
        color_strip(strip, lists, {order[0]: 1, order[-1]: 2})
    with pytest.raises(BoundViolated):
        color_strip(strip, lists, {order[-2]: 1, order[-1]: 1})
