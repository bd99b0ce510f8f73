import io
import json
import math
import subprocess
import sys

import pytest

from quasirandic.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def test_index_k3():
    code, out = run(["index", "--alpha", "-0.5", "--graph6", "-"], "Bw\n")
    assert code == 0
    [row] = json.loads(out)["results"]
    assert row["zeroth_order_randic"] == pytest.approx(3 / math.sqrt(2))


def test_index_alpha_grid_csv():
    code, out = run(["index", "--alpha", "1", "--alpha", "2", "--graph6", "-", "--format", "csv", "--edge"], "Bw\nBg\n")
    lines = out.strip().split("\n")
    assert code == 0 and len(lines) == 5
    assert lines[0].startswith("line,graph6,n,m,alpha,zeroth_order_randic")


def test_verify_t1():
    code, out = run(["verify", "--theorem", "T1", "--n", "5", "--k", "1", "--alpha", "-1"])
    assert code == 0
    [rep] = json.loads(out)["reports"]
    assert rep["passed"] and rep["bound"] == pytest.approx(23 / 12)


def test_verify_failure_exit_code():
    code, _ = run(["verify", "--theorem", "T3", "--n", "6", "--k", "2"])
    assert code == 1


def test_verify_lemma():
    code, out = run(["verify", "--theorem", "L7", "--alpha", "2"])
    assert code == 0 and json.loads(out)["reports"][0]["case"]["id"] == "L7"


def test_malformed_graph6(capsys):
    code, out = run(["recognize", "--graph6", "-"], "!!\n")
    assert code == 3 and out == ""
    assert "byte 0" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["index", "--alpha", "0", "--graph6", "-"],
    ["verify", "--theorem", "T1", "--n", "5", "--k", "1", "--alpha", "2"],
    ["verify", "--theorem", "T1", "--k", "1", "--alpha", "-1"],
    ["construct", "--family", "bullet_bistar", "--n", "5", "--k", "2"],
    ["frobnicate"],
    ["bound", "--theorem", "T1", "--n", "5", "--k", "1", "--bogus"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_construct_pipes_into_recognize():
    code, g6 = run(["construct", "--family", "degree23", "--n", "6", "--k", "2"])
    assert code == 0
    code, out = run(["recognize", "--graph6", "-"], g6)
    assert json.loads(out)["results"][0]["k"] == 2


def test_construct_join_tree():
    code, g6 = run(["construct", "--family", "join_tree", "--k", "1", "--graph6", "-"], "Bg\n")
    from quasirandic.constructions import join_family
    from quasirandic.graph6 import decode
    assert code == 0 and decode(g6.strip()) == join_family(4, 1, "path")


def test_bound_both_sides():
    code, out = run(["bound", "--theorem", "T4", "--n", "6", "--k", "2", "--alpha", "2"])
    rows = json.loads(out)["results"]
    assert [r["bound"] for r in rows] == [102, 34]


def test_enumerate_count_and_lines():
    code, out = run(["enumerate", "--n", "4", "--count"])
    assert json.loads(out)["results"][0]["count"] == 38
    code, out = run(["enumerate", "--n", "5", "--k", "3"])
    assert out.split() == ["D~{"]
    code, out = run(["enumerate", "--n", "4", "--trees"])
    assert len(out.split()) == 16


def test_jobs_do_not_change_output():
    argv = ["verify", "--theorem", "T6", "--n", "6", "--k", "2", "--alpha", "0.5", "--format", "csv"]
    assert run(argv) == run(argv + ["--jobs", "2"])


def test_tolerance_env_override():
    env = {"QUASIRANDIC_TOLERANCE": "1e-6", "PATH": ""}
    out = subprocess.run(
        [sys.executable, "-c", "from quasirandic.indices import DEFAULT_TOLERANCE as t; print(t)"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout
    assert float(out) == 1e-6


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quasirandic", "bound", "--theorem", "T3", "--n", "6", "--k", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert [r["bound"] for r in json.loads(res.stdout)["results"]] == [14, 24]
