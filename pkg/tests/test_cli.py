import json
import subprocess
import sys

import pytest

from lexsearch.cli import main

from helpers import FIXTURES

P4 = "4 3\n0 1\n1 2\n2 3\n"


@pytest.fixture
def p4(tmp_path):
    p = tmp_path / "p4.txt"
    p.write_text(P4)
    return str(p)


@pytest.fixture
def c6(tmp_path):
    p = tmp_path / "c6.txt"
    p.write_text("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lbfs_text(capsys, p4):
    assert run(capsys, "lbfs", p4, "--start", "0") == (0, "0 1 2 3\n", "")


def test_lbfs_json_and_tie(capsys, p4):
    code, out, _ = run(capsys, "lbfs", p4, "--tie", "max", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["order"] == [3, 2, 1, 0] and rep["policy"] == "max-id"


def test_lbfs_out_file(capsys, p4, tmp_path):
    target = tmp_path / "o.txt"
    assert run(capsys, "lbfs", p4, "--out", str(target))[1] == ""
    assert target.read_text() == "0 1 2 3\n"


def test_verify_exit_codes(capsys, p4, tmp_path):
    code, out, _ = run(capsys, "verify", p4, "--order", "0 2 1 3", "--format", "json")
    assert code == 1 and json.loads(out)["first_violation"] == 2
    order = tmp_path / "ord.txt"
    order.write_text("3 2 1 0\n")
    assert run(capsys, "verify", p4, "--order-file", str(order))[0] == 0


def test_verify_rejects_non_permutation(capsys, p4):
    code, _, err = run(capsys, "verify", p4, "--order", "0 1 2")
    assert code == 2 and "permutation" in err


def test_enumerate(capsys, p4):
    code, out, _ = run(capsys, "enumerate", p4, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["count"] == 6 and rep["end_vertices"] == [0, 3]
    code, out, _ = run(capsys, "enumerate", p4, "--limit", "2")
    assert out.splitlines() == ["0 1 2 3", "1 0 2 3"]


def test_enumerate_cap(capsys, tmp_path):
    p = tmp_path / "big.txt"
    p.write_text("45 44\n" + "".join(f"{i} {i + 1}\n" for i in range(44)))
    code, _, err = run(capsys, "enumerate", str(p))
    assert code == 2 and "--cap" in err


def test_endvertex(capsys, p4):
    code, out, _ = run(capsys, "endvertex", p4, "--vertex", "3")
    rep = json.loads(out)
    assert code == 0 and rep["end_vertex"] is True and rep["method"] == "characterization"
    code, out, _ = run(capsys, "endvertex", p4, "--vertex", "1", "--method", "oracle")
    assert code == 1 and json.loads(out)["end_vertex"] is False


def test_endvertex_by_name(capsys):
    code, out, _ = run(capsys, "endvertex", str(FIXTURES / "nonend_left.txt"), "--vertex", "v")
    assert code == 1 and json.loads(out)["admissible"] is True


def test_endvertex_refuses_c6(capsys, c6):
    code, _, err = run(capsys, "endvertex", c6, "--vertex", "0")
    assert code == 2 and "asteroidal triple" in err


def test_analyze(capsys, c6):
    code, out, _ = run(capsys, "analyze", c6)
    rep = json.loads(out)
    assert code == 0 and rep["bipartite"] and not rep["at_free"]
    assert rep["asteroidal_triple"]["triple"] == [0, 2, 4]
    assert rep["end_vertex_set"] is None
    rep = json.loads(run(capsys, "analyze", c6, "--cap", "10")[1])
    assert rep["end_vertex_set"] == [0, 1, 2, 3, 4, 5] and rep["end_vertex_method"] == "oracle"


def test_analyze_limit(capsys, c6):
    assert run(capsys, "analyze", c6, "--max-vertices", "3")[0] == 2


def test_missing_file(capsys):
    code, _, err = run(capsys, "lbfs", "/nonexistent/graph.txt")
    assert code == 2 and "cannot read" in err


def test_bad_graph_file(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\n0 7\n")
    code, _, err = run(capsys, "lbfs", str(p))
    assert code == 2 and "outside" in err


def test_reduce_gadget(capsys):
    code, out, _ = run(capsys, "reduce", "gadget", "--n", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["vertices"] == 33 and rep["landmarks"]["r2"] == rep["root"]


def test_reduce_sat2graph_certified(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 2 2\n1 -2 0\n2 0\n")
    code, out, _ = run(capsys, "reduce", "sat2graph", str(cnf), "--certify")
    first = out.splitlines()[0]
    assert code == 0 and first.startswith("# certification:")
    cert = json.loads(first.split(":", 1)[1])
    assert cert["sat"] and cert["lbfs_reachable_t"] and cert["agree"]


def test_reduce_sat2graph_strictness(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 1 2\n1 0\n")
    assert run(capsys, "reduce", "sat2graph", str(cnf))[0] == 2
    with pytest.warns(UserWarning):
        assert run(capsys, "reduce", "sat2graph", str(cnf), "--no-strict")[0] == 0


def test_reduce_bev2ev(capsys, p4):
    code, out, _ = run(capsys, "reduce", "bev2ev", p4, "--s", "0", "--t", "3", "--certify", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["certification"] == {"s": 0, "t": 3, "bev": True, "ev": True, "agree": True}
    assert rep["vertices"] == 8 and rep["landmarks"]["s'"] == 7


def test_reduce_dot(capsys):
    out = run(capsys, "reduce", "gadget", "--n", "1", "--format", "dot")[1]
    assert out.startswith("graph G {")


def test_usage_error_exits_2(p4):
    with pytest.raises(SystemExit) as info:
        main(["lbfs", p4, "--tie", "sideways"])
    assert info.value.code == 2


def test_console_entry_point(p4):
    proc = subprocess.run([sys.executable, "-m", "lexsearch.cli", "lbfs", p4, "--start", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3 2 1 0\n"
