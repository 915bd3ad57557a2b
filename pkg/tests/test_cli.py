import json

import pytest

from lamplight.cli import run
from lamplight.graph_core import cycle, format_graph, path, star


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def _out(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_solve_min_ev_json(capsys, write):
    f = write("c4.txt", format_graph(cycle(4), "edgelist"))
    code, out, _ = _out(capsys, ["solve", "--problem", "ev", "--minimum", "--format", "json", f])
    rep = json.loads(out)
    assert code == 0
    assert rep["size"] == 2 and rep["optimal"]
    assert rep["diagnostics"]["matching_weight"] == 4
    assert rep["bounds"] == {"lower": 2, "upper": 3}


def test_solve_infeasible_exit_1(capsys, write):
    f = write("p3.txt", format_graph(path(3), "edgelist"))
    assert _out(capsys, ["solve", "--problem", "ev", f])[0] == 1
    c3 = write("c3.txt", format_graph(cycle(3), "edgelist"))
    code, out, _ = _out(capsys, ["solve", "--problem", "ve", c3])
    assert code == 1 and "not bipartite" in out


def test_solve_then_verify_roundtrip(capsys, write, tmp_path):
    for problem in ("vv", "ve", "ev", "ee"):
        f = write("g.txt", format_graph(cycle(6), "edgelist"))
        code, out, _ = _out(capsys, ["solve", "--problem", problem, "--minimum", "--format", "json", f])
        assert code == 0
        w = write("w.json", out)
        code, out, _ = _out(capsys, ["verify", "--problem", problem, "--witness", w, f])
        assert (code, out) == (0, "valid\n")


def test_verify_rejects(capsys, write):
    f = write("c4.txt", format_graph(cycle(4), "edgelist"))
    w = write("w.txt", "0 1\n")
    code, out, _ = _out(capsys, ["verify", "--problem", "ev", "--witness", w, f])
    assert (code, out) == (1, "invalid\n")


def test_dimacs_vertex_ids_are_one_based(capsys, write):
    f = write("p3.dimacs", format_graph(path(3), "dimacs"))
    code, out, _ = _out(capsys, ["solve", "--problem", "vv", "--minimum", "--format", "json", f])
    rep = json.loads(out)
    assert rep["witness"] == [2] and rep["diagnostics"]["id_base"] == 1
    w = write("w.json", out)
    assert _out(capsys, ["verify", "--problem", "vv", "--witness", w, f])[0] == 0


def test_parse_errors_exit_2(capsys, write):
    dup = write("dup.txt", "3 2\n0 1\n1 0\n")
    code, _, err = _out(capsys, ["solve", "--problem", "ev", dup])
    assert code == 2 and err.startswith("error:")
    assert _out(capsys, ["solve", "--problem", "ev", "/nonexistent/file"])[0] == 2
    assert _out(capsys, ["solve", "--problem", "xx", dup])[0] == 2
    assert _out(capsys, [])[0] == 2


def test_gen_is_deterministic(capsys):
    a = _out(capsys, ["gen", "random_connected", "9", "0.4", "--seed", "5"])
    b = _out(capsys, ["gen", "random_connected", "9", "0.4", "--seed", "5"])
    assert a == b and a[0] == 0
    code, out, _ = _out(capsys, ["gen", "cycle", "4"])
    assert out == format_graph(cycle(4), "edgelist")


def test_output_is_byte_identical(capsys, write):
    f = write("k13.txt", format_graph(star(4), "edgelist"))
    runs = {_out(capsys, ["solve", "--problem", "ev", "--minimum", "--format", "json", f])[1] for _ in range(3)}
    assert len(runs) == 1


def test_reduce_and_match(capsys, write, tmp_path):
    f = write("c4.txt", format_graph(cycle(4), "edgelist"))
    out_path = tmp_path / "gadget.txt"
    assert _out(capsys, ["reduce", f, "--out", str(out_path)])[0] == 0
    header = out_path.read_text().split("\n", 1)[0].split()
    assert header[0] == "20"
    cross = (tmp_path / "gadget.txt.map").read_text().splitlines()
    assert len(cross) == 4 and all(line.startswith("cross ") for line in cross)
    code, out, _ = _out(capsys, ["match", str(out_path), "--format", "json"])
    assert code == 0 and json.loads(out)["matching"]["weight"] == 4


def test_reduce_map_to_stderr(capsys, write):
    f = write("k2.txt", "2 1\n0 1\n")
    code, out, err = _out(capsys, ["reduce", f])
    assert code == 0 and out.startswith("4 3") and err.strip() == "cross 2 0"


def test_reduce_isolated_vertex(capsys, write):
    f = write("g.txt", "3 1\n0 1\n")
    assert _out(capsys, ["reduce", f])[0] == 1


def test_match_without_perfect_matching(capsys, write):
    f = write("w.txt", "3 2\n0 1 1\n1 2 1\n")
    code, out, _ = _out(capsys, ["match", f])
    assert (code, out) == (1, "none\n")


def test_oracle_listing(capsys, write):
    f = write("c4.txt", format_graph(cycle(4), "edgelist"))
    code, out, _ = _out(capsys, ["oracle", "--problem", "ev", f])
    assert code == 0 and out == "count 2\n0 2\n1 3\n"


def test_check_suite(capsys):
    code, out, _ = _out(capsys, ["check", "--suite", "ve", "--limit-n", "6"])
    assert code == 0 and out.startswith("PASS ve:")
