import io
import json

import pytest

from folkman.cli import run
from folkman.graph import complete, cycle, join, to_graph6

WHEEL = to_graph6(join(complete(1), cycle(5)))
K5 = to_graph6(complete(5))


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def manifest(err):
    return json.loads(err.strip().splitlines()[-1])["manifest"]


def test_arrows_vertex_wheel():
    code, out, err = call("arrows", "vertex", "--graph6", WHEEL, "--pattern", "2,2,2")
    assert code == 0 and json.loads(out)["arrows"] is True
    m = manifest(err)
    assert m["subcommand"] == "arrows" and m["exit_code"] == 0 and len(m["digest"]) == 64


def test_arrows_edge_k5():
    code, out, _ = call("arrows", "edge", "--graph6", K5, "--pattern", "3,3")
    rec = json.loads(out)
    assert code == 1 and rec["arrows"] is False
    assert [len(c) for c in rec["certificate"]["classes"]] == [5, 5]


def test_table_contains_equality_row():
    code, out, _ = call("table", "--r-max", "20")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,k,q,lower,upper,equality,justification,assumptions"
    row = next(line for line in lines if line.startswith("13,6,8,"))
    assert row.startswith("13,6,8,27,27,True")
    code, out, _ = call("table", "--r-max", "5", "--format", "json")
    assert json.loads(out)[0]["r"] == 2


def test_table_single_records():
    code, out, _ = call("table", "--pattern", "3,3,3", "--q", "16", "--edge")
    assert code == 0 and json.loads(out)["lower"] == 21
    code, out, _ = call("table", "--r", "9", "--k", "6")
    assert json.loads(out)["lower"] == 24


def test_usage_errors():
    assert call("bogus")[0] == 2
    assert call("arrows", "vertex", "--graph6", WHEEL, "--nope")[0] == 2
    assert call("arrows", "vertex", "--graph6", WHEEL)[0] == 2
    assert call("arrows", "vertex", "--graph6", "bad\x01", "--pattern", "2")[0] == 2
    assert call("arrows", "vertex", "--pattern", "2,x", "--graph6", WHEEL)[0] == 2


def test_capacity_exit():
    code, out, _ = call("certify", "--pattern", "2,2,2", "--q", "3", "--n-cap", "14")
    assert code == 3 and json.loads(out)["error"] == "capacity"
    big = to_graph6(complete(10))
    assert call("arrows", "edge", "--graph6", big, "--pattern", "3,3")[0] == 3


def test_certify_and_stream(tmp_path):
    stream = tmp_path / "s.jsonl"
    code, out, _ = call("certify", "--pattern", "2,2", "--q", "3", "--n-cap", "6", "--stream", str(stream))
    rec = json.loads(out)
    assert code == 0 and rec["value"] == 5 and rec["minimal_graph_properties"]["violations"] == []
    lines = [json.loads(x) for x in stream.read_text().splitlines()]
    assert len(lines) == 1 + 2 + 3 + 7 + 14
    code, out, _ = call("certify", "--pattern", "2,2,2", "--q", "3", "--n-cap", "6")
    assert code == 1 and json.loads(out)["lower_bound_only"]
    assert call("certify", "--pattern", "3,3", "--q", "3", "--n-cap", "5")[0] == 1


def test_construct_and_invariants(tmp_path):
    code, out, _ = call("construct", "double-c5", "--r", "6")
    rec = json.loads(out)
    assert code == 0 and rec["verified"] and rec["measured"] == {"chi": 7, "cl": 5, "order": 11}
    assert call("construct", "triple-c5", "--r", "7")[0] == 2
    code, out, _ = call("construct", "mycielskian", "--graph6", to_graph6(cycle(5)))
    assert json.loads(out)["chi"] == 4
    code, out, _ = call("invariants", "--graph6", to_graph6(cycle(5)))
    rec = json.loads(out)
    assert rec["chromatic_number"] == 3 and rec["order_bounds"]["violations"] == []
    f = tmp_path / "g.g6"
    f.write_text(to_graph6(cycle(5)) + "\n" + K5 + "\n")
    code, out, _ = call("invariants", "--graph6-file", str(f), "--pretty")
    assert code == 0 and "chromatic_number: 5" in out


def test_mine_and_witness(tmp_path):
    cat = tmp_path / "witnesses"
    code, out, _ = call("mine", "--p", "4", "--n", "8", "--seed", "1", "--catalog", str(cat), "--out", str(tmp_path / "w.g6"))
    rec = json.loads(out)
    assert code == 0 and rec["found"]
    code, out2, _ = call("witness", "lookup", "--p", "4", "--n", "8", "--catalog", str(cat))
    assert code == 0 and json.loads(out2)["witness"]["graph6"] == rec["witness"]["graph6"]
    assert (tmp_path / "w.g6").read_text().strip() == rec["witness"]["graph6"]
    assert call("witness", "lookup", "--p", "3", "--n", "6", "--catalog", str(cat))[0] == 1
    assert call("mine", "--p", "3", "--n", "6")[0] == 1
    src = tmp_path / "ext.g6"
    src.write_text(to_graph6(cycle(5)) + "\n")
    assert call("witness", "ingest", "--p", "3", "--graph6-file", str(src), "--catalog", str(cat))[0] == 0


def test_determinism():
    a = call("mine", "--p", "5", "--n", "13", "--seed", "4")
    b = call("mine", "--p", "5", "--n", "13", "--seed", "4")
    assert a[1] == b[1]
    assert manifest(a[2])["digest"] == manifest(b[2])["digest"]


def test_out_file(tmp_path):
    target = tmp_path / "grid.csv"
    code, out, _ = call("table", "--r-max", "4", "--out", str(target))
    assert code == 0 and out == "" and target.read_text().startswith("r,k,q")


def test_threads_env(monkeypatch):
    monkeypatch.setenv("FOLKMAN_THREADS", "2")
    code, _, err = call("certify", "--pattern", "2,2", "--q", "3", "--n-cap", "5")
    assert code == 0 and manifest(err)["parameters"]["threads"] == 2
