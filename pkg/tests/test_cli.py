from __future__ import annotations

import json
import subprocess
import sys

import pytest

from psdthrottle.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_json(capsys):
    code, out, _ = _run(capsys, "compute", "--family", "cycle", "10", "--format", "json")
    assert code == 0
    d = json.loads(out)
    vals = {r["parameter"]: r["value"] for r in d["results"]}
    assert vals == {"z_plus": 2, "th_sum": 4, "th_times": 6, "th_star": 4}
    assert d["graph"]["n"] == 10


def test_compute_pt_k_and_one_indexed(capsys):
    code, out, _ = _run(capsys, "compute", "--family", "path", "7", "--param", "pt_k", "--k", "1",
                        "--format", "json", "--one-indexed")
    r = json.loads(out)["results"][0]
    assert (r["value"], r["witness"]) == (3, [4])


def test_compute_tsv_from_graph6(capsys):
    code, out, _ = _run(capsys, "compute", "--graph6", "D?{", "--param", "th_times", "--format", "tsv")
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == ["parameter", "value", "witness", "pt", "k_searched"]
    assert lines[1].split("\t")[:2] == ["th_times", "2"]


def test_compute_from_edge_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = _run(capsys, "compute", "--edges", str(f), "--param", "th_sum")
    assert code == 0 and "th_sum = 3" in out


def test_trace_text(capsys):
    code, out, _ = _run(capsys, "trace", "--family", "path", "5", "--set", "2")
    assert out == "1: 2->1 2->3\n2: 1->0 3->4\nstatus: forced_all\npt: 2\n"


def test_trace_stalled_json(capsys):
    code, out, _ = _run(capsys, "trace", "--family", "cycle", "5", "--set", "0", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["status"] == "stalled" and d["pt"] == "inf"


def test_verify_exit_codes(capsys):
    code, out, _ = _run(capsys, "verify", "--family", "cycle", "6")
    assert code == 0 and out.startswith("graph\tbound")
    code, out, _ = _run(capsys, "verify", "--family", "path", "3", "--ops", "--product-with", "A_",
                        "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_verify_reports_violation(capsys, monkeypatch):
    from psdthrottle import bounds, cli

    real = bounds.bound_report

    def broken(G, **kw):
        rep = real(G, **kw)
        rep.check("planted", 1, "<=", 0)
        return rep

    monkeypatch.setattr(cli, "bound_report", broken)
    code, out, _ = _run(capsys, "verify", "--family", "path", "4")
    assert code == 1 and "planted\t1\t<=\t0\tfalse" in out


def test_table(capsys):
    code, out, _ = _run(capsys, "table", "--family", "cycle", "4..6", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["all_match"] and len(d["rows"]) == 3
    assert d["rows"][1]["quoted_value_differs"] == ["pt_plus"]
    code, out, _ = _run(capsys, "table", "--family", "complete_bipartite", "1..2", "3")
    assert code == 0 and len(out.strip().split("\n")) == 3


def test_cops(capsys):
    code, out, _ = _run(capsys, "cops", "--family", "cycle", "6", "--k", "2", "--set", "0,3", "--format", "json")
    d = json.loads(out)
    assert d["cop_number"] == 2 and d["capture_time"] == 1 and d["capt_k"]["value"] == 1


@pytest.mark.parametrize("argv", [
    ["compute", "--graph6", "garbage\x01"],
    ["compute", "--family", "cycle", "2"],
    ["compute", "--family", "cycle", "x"],
    ["compute", "--family", "path", "4", "--param", "pt_k"],
    ["trace", "--family", "path", "4", "--set", "9"],
    ["table", "--family", "random_tree", "5"],
])
def test_usage_errors(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_size_limit_exit_code(capsys):
    code, _, err = _run(capsys, "compute", "--family", "path", "30")
    assert code == 3 and "size limit" in err


def test_argparse_usage_exit_code():
    proc = subprocess.run([sys.executable, "-m", "psdthrottle", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_stdin_graph6():
    proc = subprocess.run([sys.executable, "-m", "psdthrottle", "compute", "--graph6-file", "-",
                           "--param", "z_plus", "--format", "json"],
                          input="Bw\n", capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["value"] == 2
