"""CLI subcommands, output formats, and exit codes."""

import json
from pathlib import Path

from lobes.cli import run_cli
from lobes.graph import parse_graph, serialize_graph
from lobes.catalog import named_graph

FIXTURES = Path(__file__).parent / "fixtures"

BOWTIE_TEXT = "5 6\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n"


def write_bowtie(tmp_path):
    path = tmp_path / "bowtie.g"
    path.write_text(BOWTIE_TEXT)
    return str(path)


def test_decompose(tmp_path, capsys):
    assert run_cli(["decompose", write_bowtie(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "lobes: 2" in out and "cut vertices: [2]" in out


def test_decompose_json(tmp_path, capsys):
    assert run_cli(["decompose", write_bowtie(tmp_path), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["lobe_count"] == 2
    assert doc["lobes"] == [[0, 1, 2], [2, 3, 4]]
    assert doc["cut_vertices"] == [2]
    assert doc["class_of"] == [0, 0]


def test_aut(tmp_path, capsys):
    assert run_cli(["aut", write_bowtie(tmp_path), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["group_order"] == 8
    assert len(doc["orbits"]["vertices"]) == 2


def test_classify(tmp_path, capsys):
    assert run_cli(["classify", write_bowtie(tmp_path), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["theorem"]["lobe"] is True
    assert doc["theorem"]["edge"] is False
    assert doc["consistent"] is True


def test_karc(tmp_path, capsys):
    pet = tmp_path / "petersen.g"
    pet.write_text(serialize_graph(named_graph("petersen")))
    assert run_cli(["karc", str(pet), "-k", "3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["orbit_count"] == 1


def test_build_writes_graph_and_sidecar(tmp_path, capsys):
    out = tmp_path / "gamma.g"
    code = run_cli(["build", str(FIXTURES / "chord5cyc.json"),
                    "-o", str(out)])
    assert code == 0
    g = parse_graph(out.read_text())
    assert g.vertex_count == 57
    sidecar = json.loads((tmp_path / "gamma.g.json").read_text())
    assert sidecar["depth"] == 1
    assert len(sidecar["lobes"]) == 14
    assert sidecar["lobes"][0]["sigma"] == [0, 1, 2, 3, 4]


def test_build_stdout_deterministic(capsys):
    assert run_cli(["build", str(FIXTURES / "clothesline_i.json")]) == 0
    first = capsys.readouterr().out
    assert run_cli(["build", str(FIXTURES / "clothesline_i.json")]) == 0
    assert capsys.readouterr().out == first


def test_limit(capsys):
    assert run_cli(["limit", str(FIXTURES / "kst_equal_3a.json"),
                    "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["arc_transitive"] is True and doc["edge_case"] == "3a"


def test_limit_uniform_k4_is_arc_transitive(capsys):
    # K4 lobes, two at every vertex: fully transitive limit
    assert run_cli(["limit", str(FIXTURES / "k4_uniform.json"), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["lobe_transitive"] and doc["vertex_transitive"]
    assert doc["edge_transitive"] and doc["arc_transitive"]


def test_equiv_exit_codes(capsys):
    a = str(FIXTURES / "clothesline_i.json")
    b = str(FIXTURES / "clothesline_iv.json")
    c = str(FIXTURES / "chord5cyc.json")
    assert run_cli(["equiv", a, b, "-d", "2"]) == 0
    assert "equivalent" in capsys.readouterr().out
    assert run_cli(["equiv", a, c, "-d", "1"]) == 1
    assert "not equivalent" in capsys.readouterr().out


def test_iso_exit_codes(tmp_path, capsys):
    g1 = tmp_path / "a.g"
    g2 = tmp_path / "b.g"
    g3 = tmp_path / "c.g"
    g1.write_text("3 2\n0 1\n1 2\n")
    g2.write_text("3 2\n0 2\n1 2\n")
    g3.write_text("3 3\n0 1\n0 2\n1 2\n")
    assert run_cli(["iso", str(g1), str(g2)]) == 0
    capsys.readouterr()
    assert run_cli(["iso", str(g1), str(g3)]) == 1
    assert "non-isomorphic" in capsys.readouterr().out


def test_named(capsys):
    assert run_cli(["named", "petersen"]) == 0
    text = capsys.readouterr().out
    assert parse_graph(text).vertex_count == 10
    assert run_cli(["named", "complete_bipartite", "2", "3"]) == 0
    assert parse_graph(capsys.readouterr().out).edge_count == 6


def test_usage_errors(capsys):
    assert run_cli([]) == 2
    capsys.readouterr()
    assert run_cli(["classify"]) == 2
    capsys.readouterr()
    assert run_cli(["karc", "x.g"]) == 2
    capsys.readouterr()
    assert run_cli(["frobnicate"]) == 2


def test_input_errors(tmp_path, capsys):
    missing = str(tmp_path / "nope.g")
    assert run_cli(["classify", missing]) == 3
    bad = tmp_path / "bad.g"
    bad.write_text("3 1\n0 3\n")
    assert run_cli(["classify", str(bad)]) == 3
    err = capsys.readouterr().err
    assert "error" in err
    badspec = tmp_path / "bad.json"
    badspec.write_text("{\"lambda0\": 3}")
    assert run_cli(["limit", str(badspec)]) == 3
    disconnected = tmp_path / "disc.g"
    disconnected.write_text("3 1\n0 1\n")
    assert run_cli(["classify", str(disconnected)]) == 3


def test_resource_cap_exit_code(capsys):
    code = run_cli(["build", str(FIXTURES / "chord5cyc.json"),
                    "--max-vertices", "20"])
    assert code == 4
    assert "error" in capsys.readouterr().err


def test_named_unknown(capsys):
    assert run_cli(["named", "mystery"]) == 3
