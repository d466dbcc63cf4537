import json
import re
import subprocess
import sys

import networkx as nx
import pytest
from hypothesis import given

from coupled_chroma import io
from coupled_chroma.cli import bench_color_wheel, main
from coupled_chroma.errors import GraphError
from coupled_chroma.incidence import build_incidence_graph
from coupled_chroma.plane_graph import ElementRef, build_prism, build_wheel, plane_isomorphism

from conftest import corpus, plane_graphs, to_multigraph


# --- io ---------------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(corpus()))
def test_graph_json_round_trip(name):
    g = corpus()[name]
    back = io.graph_from_json(json.loads(json.dumps(io.graph_to_json(g))))
    assert back == g


@given(plane_graphs())
def test_graph_json_round_trip_generated(g):
    assert io.graph_from_json(io.graph_to_json(g)) == g


def test_graph_json_schema():
    data = io.graph_to_json(build_wheel(5)[0], io.wheel_host(5))
    assert set(data) == {"vertices", "darts", "outer_face_dart", "host"}
    assert set(data["darts"][0]) == {"id", "twin", "next_at_vertex", "origin"}
    n, emb = io.host_from_json(data)
    assert n == 5 and emb.vertex_map == tuple(range(5))


def test_malformed_graph_json():
    with pytest.raises(GraphError):
        io.graph_from_json({"vertices": 1})
    with pytest.raises(GraphError):
        io.graph_from_json({"vertices": 1, "darts": [{"id": 3, "twin": 0, "next_at_vertex": 0, "origin": 0}]})


def test_lists_and_coloring_round_trip():
    lists = {ElementRef("v", 3): frozenset({1, 2, 5, 6}), ElementRef("f", 0): frozenset({5, 6, 7, 8})}
    data = io.lists_to_json(lists)
    assert data == {"lists": {"v:3": [1, 2, 5, 6], "f:0": [5, 6, 7, 8]}}
    assert io.lists_from_json(data) == lists
    coloring = {ElementRef("v", 0): 2, ElementRef("f", 1): 4}
    assert io.coloring_from_json(io.coloring_to_json(coloring)) == coloring
    with pytest.raises(GraphError):
        io.lists_from_json({"lists": {"q:1": [1]}})
    with pytest.raises(GraphError):
        io.coloring_from_json({})


def test_dot_views():
    g = build_prism()
    primal = io.to_dot(g, "primal")
    assert primal.startswith("graph primal") and primal.count("--") == 9
    dual = io.to_dot(g, "dual")
    assert dual.count("style=dashed") == 9 and dual.count("shape=box") == 5
    inc = io.to_dot(g, "incidence")
    assert inc.count("--") == 36 and inc.count("shape=box") == 5
    with pytest.raises(ValueError):
        io.to_dot(g, "side")


def test_dot_parses_back_to_same_graph():
    g = build_wheel(7)[0]
    edges = re.findall(r'"v:(\d+)" -- "v:(\d+)"', io.to_dot(g, "primal"))
    h = nx.MultiGraph([(int(a), int(b)) for a, b in edges])
    assert nx.is_isomorphic(h, to_multigraph(g))


def test_graph6_import():
    g = build_prism()
    text = io.graph_to_graph6(g)
    rotations = [g.neighbors(v) for v in range(g.vertex_count)]
    back = io.graph_from_graph6(text, rotations)
    assert plane_isomorphism(back, g) is not None
    with pytest.raises(GraphError):
        io.graph_from_graph6(text, rotations[:-1])
    bad = [list(r) for r in rotations]
    bad[0] = bad[0][:-1]
    with pytest.raises(GraphError):
        io.graph_from_graph6(text, bad)


# --- cli ---------------------------------------------------------------------------


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_wheel(tmp_path, capsys):
    code, out, _ = run(["gen", "--kind", "wheel", "--n", 9], capsys)
    assert code == 0
    g = io.graph_from_json(json.loads(out))
    assert (g.vertex_count, g.edge_count, g.face_count) == (9, 16, 9)


@pytest.mark.parametrize(
    "argv,counts",
    [
        (["--kind", "cycle", "--n", 5], (5, 5, 2)),
        (["--kind", "triple-edge"], (2, 3, 3)),
        (["--kind", "prism"], (6, 9, 5)),
        (["--kind", "k4-minus-edge"], (4, 5, 3)),
        (["--kind", "cycle", "--n", 5, "--stellate"], (6, 10, 6)),
        (["--kind", "k4-minus-edge", "--stellate"], (5, 9, 6)),
        (["--kind", "wheel-subgraph", "--n", 9, "--delete-vertices", 0], (8, 8, 2)),
    ],
)
def test_gen_kinds(argv, counts, capsys):
    code, out, _ = run(["gen", *argv], capsys)
    assert code == 0
    g = io.graph_from_json(json.loads(out))
    assert (g.vertex_count, g.edge_count, g.face_count) == counts


def test_gen_is_reproducible(tmp_path, capsys):
    outs = []
    for i in range(2):
        args = ["gen", "--kind", "wheel-subgraph", "--n", 11, "--seed", 4,
                "--out", tmp_path / f"g{i}.json", "--lists-out", tmp_path / f"l{i}.json"]
        assert run(args, capsys)[0] == 0
        outs.append(((tmp_path / f"g{i}.json").read_bytes(), (tmp_path / f"l{i}.json").read_bytes()))
    assert outs[0] == outs[1]


def write_instance(tmp_path, capsys, kind_args, seed=1):
    g_path, l_path = tmp_path / "g.json", tmp_path / "l.json"
    args = ["gen", *kind_args, "--seed", seed, "--out", g_path, "--lists-out", l_path]
    assert run(args, capsys)[0] == 0
    return g_path, l_path


@pytest.mark.parametrize(
    "kind_args",
    [
        ["--kind", "wheel", "--n", 12],
        ["--kind", "wheel-subgraph", "--n", 10],
        ["--kind", "prism"],
        ["--kind", "cycle", "--n", 6, "--stellate"],
    ],
)
def test_color_then_verify(tmp_path, capsys, kind_args):
    g_path, l_path = write_instance(tmp_path, capsys, kind_args)
    c_path, t_path = tmp_path / "c.json", tmp_path / "t.json"
    code, _, _ = run(["color", "--graph", g_path, "--lists", l_path, "--out", c_path, "--trace", t_path], capsys)
    assert code == 0
    assert "pipeline" in json.loads(t_path.read_text())
    code, out, _ = run(["verify", "--graph", g_path, "--lists", l_path, "--coloring", c_path], capsys)
    assert (code, out.strip()) == (0, "Valid")


def test_color_exact_override(tmp_path, capsys):
    g_path, l_path = write_instance(tmp_path, capsys, ["--kind", "wheel", "--n", 8])
    t_path = tmp_path / "t.json"
    code, _, _ = run(["color", "--graph", g_path, "--lists", l_path, "--solver", "exact", "--trace", t_path], capsys)
    assert code == 0 and json.loads(t_path.read_text())["pipeline"] == "exact"


def test_color_is_reproducible(tmp_path, capsys):
    g_path, l_path = write_instance(tmp_path, capsys, ["--kind", "wheel", "--n", 15])
    outs = [run(["color", "--graph", g_path, "--lists", l_path], capsys)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_reports_clashing_pair(tmp_path, capsys):
    g_path, l_path = write_instance(tmp_path, capsys, ["--kind", "wheel", "--n", 6])
    lists = io.lists_from_json(io.read_json(l_path))
    lists = {y: frozenset(range(1, 6)) for y in lists}
    io.write_json(io.lists_to_json(lists), l_path)
    coloring = {y: 1 for y in lists}
    c_path = tmp_path / "c.json"
    io.write_json(io.coloring_to_json(coloring), c_path)
    code, out, _ = run(["verify", "--graph", g_path, "--lists", l_path, "--coloring", c_path], capsys)
    assert code == 2
    assert out.strip() == "Violation: v:0 v:1 both colored 1"


def test_verify_missing_color(tmp_path, capsys):
    g_path, l_path = write_instance(tmp_path, capsys, ["--kind", "prism"])
    c_path = tmp_path / "c.json"
    io.write_json({"coloring": {"v:0": 1}}, c_path)
    code, out, _ = run(["verify", "--graph", g_path, "--lists", l_path, "--coloring", c_path], capsys)
    assert code == 2 and "no color" in out


def test_color_unsat_and_budget_exit_codes(tmp_path, capsys):
    g_path = tmp_path / "p.json"
    run(["gen", "--kind", "prism", "--out", g_path], capsys)
    g = io.graph_from_json(io.read_json(g_path))
    l_path = tmp_path / "l.json"
    io.write_json(io.lists_to_json({y: range(1, 6) for y in g.elements()}), l_path)
    assert run(["color", "--graph", g_path, "--lists", l_path], capsys)[0] == 2
    assert run(["color", "--graph", g_path, "--lists", l_path, "--budget", 5], capsys)[0] == 3


def test_invalid_input_exit_code(tmp_path, capsys):
    assert run(["gen", "--kind", "wheel"], capsys)[0] == 1
    assert run(["color", "--graph", tmp_path / "missing.json", "--lists", "x"], capsys)[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["export-dot", "--graph", bad], capsys)[0] == 1
    g_path, _ = write_instance(tmp_path, capsys, ["--kind", "prism"])
    short = tmp_path / "short.json"
    io.write_json({"lists": {"v:0": [1]}}, short)
    assert run(["color", "--graph", g_path, "--lists", short], capsys)[0] == 1
    assert run(["certify"], capsys)[0] == 1


def test_color_trials(tmp_path, capsys):
    g_path, _ = write_instance(tmp_path, capsys, ["--kind", "wheel-subgraph", "--n", 9], seed=7)
    code, out, _ = run(["color", "--graph", g_path, "--trials", 30, "--seed", 2], capsys)
    summary = json.loads(out)
    assert code == 0 and summary["results"] == {"valid": 30}


def test_certify_all(capsys):
    code, out, _ = run(["certify", "--all"], capsys)
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(reports) == 7
    assert all(r["status"] == "confirmed" for r in reports)


def test_certify_budget_exit_code(capsys):
    code, out, _ = run(["certify", "--name", "prism_not_5", "--budget", 10], capsys)
    assert code == 3 and json.loads(out)["status"] == "incomplete"


def test_export_dot_round_trip(tmp_path, capsys):
    g_path = tmp_path / "g.json"
    run(["gen", "--kind", "wheel", "--n", 8, "--out", g_path], capsys)
    for view in ("primal", "dual", "incidence"):
        d_path = tmp_path / f"{view}.dot"
        assert run(["export-dot", "--graph", g_path, "--view", view, "--out", d_path], capsys)[0] == 0
        assert d_path.read_text().startswith("graph ")
    g = io.graph_from_json(io.read_json(g_path))
    assert plane_isomorphism(g, build_wheel(8)[0]) is not None
    x_edges = re.findall(r'"([vf]:\d+)" -- "([vf]:\d+)"', (tmp_path / "incidence.dot").read_text())
    parsed = {frozenset(map(ElementRef.parse, e)) for e in x_edges}
    assert parsed == build_incidence_graph(g).edge_set()


def test_gen_graph6(tmp_path, capsys):
    g = build_prism()
    rot = tmp_path / "rot.json"
    rot.write_text(json.dumps({"rotations": [g.neighbors(v) for v in range(6)]}))
    code, out, _ = run(["gen", "--kind", "graph6", "--graph6", io.graph_to_graph6(g), "--rotations", rot], capsys)
    assert code == 0
    assert plane_isomorphism(io.graph_from_json(json.loads(out)), g) is not None


def test_bench_small(capsys):
    code, out, _ = run(["bench", "--sizes", "10,20", "--repeats", 3], capsys)
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["n"] for r in rows] == [10, 20]
    assert all(len(r["runs"]) == 3 and r["median_seconds"] > 0 for r in rows)
    assert len(bench_color_wheel([5], repeats=1)) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coupled_chroma", "gen", "--kind", "triple-edge"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["vertices"] == 2
