import csv
import io
import json

import pytest

import chroma.embodiment as emb
from chroma.cli import SWEEP_COLUMNS, main
from chroma.cluster import ColouredGraph
from chroma.graph import Graph
from chroma.serialize import from_dot


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_embody_dot(tmp_path, capsys):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "embody", "--cluster", "5,4,3,3", "--kind", "type1", "--complete", "--format", "dot", "--out", str(path))
    assert code == 0
    assert out.strip() == "order=15 size=17 chi=4"
    cg = from_dot(path.read_text())
    assert cg.graph.size == 17


def test_embody_null_json(capsys):
    code, out, err = run(capsys, "embody", "--cluster", "1", "--kind", "null", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["vertices"] == [{"class": 1, "ordinal": 1}]
    assert "order=1 size=0" in err


def test_embody_path_type_fails(capsys):
    code, _, err = run(capsys, "embody", "--cluster", "5,1", "--kind", "path_type")
    assert code == 1
    assert "path-type construction failed" in err


def test_embody_bad_cluster(capsys):
    code, _, err = run(capsys, "embody", "--cluster", "3,0", "--kind", "type1")
    assert code == 1 and "invalid class size" in err


def test_indices_triangle(capsys):
    code, out, _ = run(capsys, "indices", "--cluster", "1,1,1", "--kind", "type2", "--complete")
    data = json.loads(out)
    assert (code, data["m1"], data["m2"], data["m3"]) == (0, 14, 11, 4)


def test_indices_extremal(capsys):
    code, out, _ = run(capsys, "indices", "--cluster", "3,1", "--kind", "type1", "--extremal")
    ext = json.loads(out)["extremal"]
    assert (ext["m1"]["min"], ext["m1"]["max"]) == (7, 13)
    assert ext["m1"]["argmax"] == [2, 1]


def test_indices_tree_m2(capsys):
    _, out, _ = run(capsys, "indices", "--cluster", "2,1", "--kind", "type1")
    assert json.loads(out)["m2"] == 4


def test_indices_guard(capsys, monkeypatch):
    code, _, err = run(capsys, "indices", "--cluster", "1,1,1,1", "--kind", "type1", "--extremal", "--limit", "3")
    assert code == 1 and "factorial" in err
    monkeypatch.setenv("CHROMA_GUARD_LMAX", "3")
    assert run(capsys, "indices", "--cluster", "1,1,1,1", "--kind", "type1", "--extremal")[0] == 1
    assert run(capsys, "indices", "--cluster", "1,1,1,1", "--kind", "type1", "--extremal", "--limit", "4")[0] == 0


def test_verify_p33(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--suites", "p33", "--r-max", "2", "--n-max", "1", "--out", str(out))
    data = json.loads(out.read_text())
    assert code == 0
    assert [r["status"] for r in data["records"]] == ["match"] * 3


def test_verify_mismatch_still_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "p33", "--r-max", "3", "--n-max", "1", "--strict")
    data = json.loads(out)
    assert code == 0
    assert any(r["id"] == "P33_M3" and r["status"] == "mismatch" for r in data["records"])


def test_verify_strict_structure_ok(capsys):
    assert run(capsys, "verify", "--suites", "structure", "--l-max", "4", "--strict")[0] == 0


def test_verify_strict_detects_corruption(capsys, monkeypatch):
    real = emb.type1_tree

    def broken(c):
        cg = real(c)
        edges = cg.graph.sorted_edges()[1:]
        return ColouredGraph(Graph(cg.graph.vertices, frozenset(edges)), cg.colouring, cg.cluster)

    monkeypatch.setattr(emb, "type1_tree", broken)
    code, _, err = run(capsys, "verify", "--suites", "structure", "--l-max", "4", "--strict")
    assert code == 2
    assert "type1_tree_minimal" in err
    # without --strict the same failure is only reported
    assert run(capsys, "verify", "--suites", "structure", "--l-max", "4")[0] == 0


def test_verify_bad_suite(capsys):
    code, _, err = run(capsys, "verify", "--suites", "nonsense")
    assert code == 1 and "unknown suites" in err


def test_verify_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--l-max", "4", "--seed", "11", "--random-clusters", "5"]
    run(capsys, *args, "--out", str(a))
    run(capsys, *args, "--workers", "4", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_sweep_s1(capsys):
    code, out, _ = run(capsys, "sweep", "--sequence", "s1", "--l-max", "3", "--kinds", "type1_complete")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 3
    assert list(rows[0]) == SWEEP_COLUMNS
    row2 = [r for r in rows if r["l"] == "2"][0]
    assert row2["m1_min"] == "6" and row2["f_m1_min"] == "6"


def test_sweep_s2(capsys):
    _, out, _ = run(capsys, "sweep", "--sequence", "s2", "--l-max", "4", "--format", "json")
    rows = json.loads(out)
    assert {r["cluster"] for r in rows if r["l"] == 4} == {"3-2-1-1"}


def test_sweep_bad(capsys):
    assert run(capsys, "sweep", "--sequence", "s1", "--l-max", "0")[0] == 1
    assert run(capsys, "sweep", "--sequence", "s1", "--l-max", "3", "--kinds", "thorn")[0] == 1


def test_sweep_help_documents_columns(capsys):
    with pytest.raises(SystemExit):
        main(["sweep", "--help"])
    out = capsys.readouterr().out
    assert "m1_min" in out and "ok_m3_max" in out
