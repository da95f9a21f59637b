from __future__ import annotations

import io

import numpy as np

from stabgraph import cli
from stabgraph.graphstate import Graph

EDGE_TEXT = "0 1\n1 0\n"
P3_TEXT = "0 1 0\n1 0 1\n0 1 0\n"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_adjacency_round_trip():
    graphs = cli.parse_adjacency_text(EDGE_TEXT + "\n" + P3_TEXT + "\n# note\n")
    assert len(graphs) == 2
    assert cli.serialize_graphs(graphs) == EDGE_TEXT.strip() + "\n\n" + \
        P3_TEXT.strip() + "\n"


def test_stab2graph(tmp_path):
    gens = tmp_path / "gens.txt"
    gens.write_text("XXX\nZZI\nIZZ\n")
    dot = tmp_path / "out.dot"
    code, out, err = run(["stab2graph", "--in", str(gens), "--dot", str(dot)])
    assert code == 0
    assert "0" in out and "1" in out
    text = dot.read_text()
    assert text.startswith("graph G {") and "--" in text


def test_stab2graph_bad_input(tmp_path):
    gens = tmp_path / "gens.txt"
    gens.write_text("XX\nZZ\n")  # anticommuting? no: XX,ZZ commute; use X,Z
    gens.write_text("XI\nZI\n")
    code, out, err = run(["stab2graph", "--in", str(gens)])
    assert code == 1
    assert "error:" in err


def test_lc_and_measure(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(P3_TEXT)
    code, out, _ = run(["lc", "--in", str(f), "--vertex", "2"])
    assert code == 0
    # LC at the middle of P3 adds edge 1-3
    assert out.strip().splitlines()[0] == "0 1 1"
    code, out, _ = run(["measure", "--in", str(f), "--vertex", "1",
                        "--basis", "Z"])
    assert code == 0
    assert out.strip().splitlines()[0] == "0 0 0"


def test_orbit_and_representative(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("0 1 1\n1 0 1\n1 1 0\n")
    code, out, _ = run(["orbit", "--in", str(f)])
    assert code == 0
    assert "# orbit size 4" in out
    code, out, _ = run(["representative", "--in", str(f)])
    assert code == 0
    g = cli.parse_adjacency_text(out)[0]
    assert g.edge_count() == 2


def test_orbit_guard_exit_code(tmp_path):
    f = tmp_path / "r.txt"
    ring = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    f.write_text(cli.serialize_graph(ring) + "\n")
    code, _, err = run(["orbit", "--in", str(f), "--guard", "2"])
    assert code == 2
    assert "error:" in err


def test_standardise_drops_disconnected(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(P3_TEXT + "\n" + "0 0\n0 0\n")
    dst = tmp_path / "out.txt"
    code, _, _ = run(["standardise", "--in", str(f), "--out", str(dst)])
    assert code == 0
    assert len(cli.parse_adjacency_text(dst.read_text())) == 1


def test_distance_and_partition(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(P3_TEXT)
    code, out, _ = run(["distance", "--in", str(f)])
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(["partition", "--in", str(f)])
    assert code == 0
    assert "V1: 1,3" in out and "V2: 2" in out


def test_classify_partitions_input(tmp_path):
    f = tmp_path / "g.txt"
    ring5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    f.write_text(P3_TEXT + "\n" + cli.serialize_graph(ring5) + "\n")
    passed = tmp_path / "p.txt"
    failed = tmp_path / "f.txt"
    code, out, _ = run(["classify", "--in", str(f), "--passed", str(passed),
                        "--failed", str(failed)])
    assert code == 0
    assert "passed 2 failed 0" in out
    assert "# verdict: Tree" in passed.read_text()


def test_msc_with_dot(tmp_path):
    f = tmp_path / "g.txt"
    ring5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    f.write_text(cli.serialize_graph(ring5) + "\n")
    dot = tmp_path / "g.dot"
    code, out, _ = run(["msc", "--in", str(f), "--dot", str(dot),
                        "--mark-minimal"])
    assert code == 0
    assert "msc=yes" in out
    assert "fillcolor=black" in dot.read_text()


def test_schmidt_and_entanglement(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(P3_TEXT)
    code, out, _ = run(["schmidt", "--in", str(f), "--set", "1,3"])
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(["entanglement", "--in", str(f),
                        "--partition", "1;2,3"])
    assert code == 0 and out.strip().isdigit()


def test_audit(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("XZ\nZX\n")
    code, out, _ = run(["audit", "--in", str(f)])
    assert code == 0
    assert "[S:Pi] = 4" in out
    assert "bell pairs: (1,2)" in out


def test_lulc_verify(tmp_path):
    gfile = tmp_path / "g.txt"
    gfile.write_text(P3_TEXT)
    sfile = tmp_path / "s.txt"
    sfile.write_text("XZI\nZXZ\nIZX\n")
    ufile = tmp_path / "u.txt"
    ufile.write_text("1 0 0 1\n" * 3)
    code, out, _ = run(["lulc-verify", "--graph", str(gfile),
                        "--stab", str(sfile), "--unitary", str(ufile)])
    assert code == 0
    assert "success" in out


def test_cg(tmp_path):
    code, out, _ = run(["cg", "--group", "dihedral", "--n", "8",
                        "--mu1", "rho:1", "--mu2", "rho:2"])
    assert code == 0
    assert "type: type4" in out
    assert "rho:3x1 rho:1x1" in out
    assert "verified: yes" in out


def test_unknown_flag_exits_nonzero():
    code, _, _ = run(["distance", "--nope"])
    assert code == 1
