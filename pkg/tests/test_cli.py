"""Command line interface, driven in-process through main()."""

import json

import pytest

from dichroma.cli import main
from dichroma.dgf import emit_dgf, parse_dgf
from dichroma.digraph import complete_digraph, directed_cycle, obstruction


@pytest.fixture()
def triangle(tmp_path):
    path = tmp_path / "c3.dgf"
    path.write_text(emit_dgf(directed_cycle(3)), encoding="ascii")
    return str(path)


@pytest.fixture()
def k4(tmp_path):
    path = tmp_path / "k4.dgf"
    path.write_text(emit_dgf(complete_digraph(4)), encoding="ascii")
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out else None
    err = json.loads(captured.err) if captured.err else None
    return code, out, err


def test_params(capsys, triangle) -> None:
    code, out, err = _run(capsys, ["params", triangle])
    assert code == 0 and err is None
    assert out["n"] == 3 and out["arc_count"] == 3
    assert out["delta_max"] == 1 and out["omega_bi"] == 1
    assert out["omega_directed"] == 2
    assert out["d_out"] == [1, 1, 1]


def test_dicolor_exact(capsys, triangle) -> None:
    code, out, _ = _run(capsys, ["dicolor", triangle])
    assert code == 0
    assert out["dichromatic_number"] == 2
    assert set(out["colouring"]["assignment"]) == {"0", "1", "2"}


def test_dicolor_with_k(capsys, triangle) -> None:
    code, out, _ = _run(capsys, ["dicolor", triangle, "--k", "1"])
    assert code == 0
    assert out["dicolourable"] is False and out["colouring"] is None
    code, out, _ = _run(capsys, ["dicolor", triangle, "--k", "2"])
    assert out["dicolourable"] is True


def test_dicolor_with_lists(capsys, tmp_path, triangle) -> None:
    lists = tmp_path / "lists.json"
    lists.write_text(json.dumps([[0], [0], [1]]), encoding="ascii")
    code, out, _ = _run(capsys, ["dicolor", triangle, "--list", str(lists)])
    assert code == 0 and out["list_dicolourable"] is True
    lists.write_text(json.dumps([[0], [0], [0]]), encoding="ascii")
    code, out, _ = _run(capsys, ["dicolor", triangle, "--list", str(lists)])
    assert code == 0 and out["list_dicolourable"] is False
    lists.write_text(json.dumps([[0], [0]]), encoding="ascii")
    code, out, err = _run(capsys, ["dicolor", triangle, "--list", str(lists)])
    assert code == 2 and err["error"] == "InvalidParameter"


def test_transversal(capsys, k4, tmp_path) -> None:
    code, out, _ = _run(capsys, ["transversal", k4])
    assert code == 0
    assert out["hitting_set"] is not None and out["obstruction"] is None
    path = tmp_path / "obs.dgf"
    path.write_text(emit_dgf(obstruction(5, 1)), encoding="ascii")
    code, out, _ = _run(capsys, ["transversal", str(path)])
    assert code == 0
    assert out["obstruction"] == [5, 1]
    assert out["isomorphism"] is not None


def test_asr(capsys, tmp_path) -> None:
    d = parse_dgf("n 4\n0 2\n2 1\n")
    path = tmp_path / "d.dgf"
    path.write_text(emit_dgf(d), encoding="ascii")
    parts = tmp_path / "parts.json"
    parts.write_text(json.dumps([[0, 1], [2, 3]]), encoding="ascii")
    code, out, _ = _run(
        capsys, ["asr", str(path), "--parts", str(parts), "--k", "1"]
    )
    assert code == 0 and out["found"] is True
    assert len(out["transversal"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[0, 2], [1, 3]]), encoding="ascii")
    code, _, err = _run(
        capsys, ["asr", str(path), "--parts", str(bad), "--k", "1"]
    )
    assert code == 2 and err["error"] == "InvalidParameter"


def test_sparse(capsys, tmp_path) -> None:
    d = parse_dgf("n 6\n" + "".join(f"{i} {(i + j) % 6}\n" for i in range(6) for j in (1, 2)))
    path = tmp_path / "circ.dgf"
    path.write_text(emit_dgf(d), encoding="ascii")
    code, out, _ = _run(capsys, ["sparse", str(path), "--B", "0", "--seed", "3"])
    assert code == 0 and out["found"] is True
    code, _, err = _run(capsys, ["sparse", str(path), "--B", "99"])
    assert code == 2 and err["error"] == "PreconditionViolated"


def test_dense(capsys, k4) -> None:
    code, out, _ = _run(
        capsys, ["dense", k4, "--a", "1/600", "--eps", "1/1000000"]
    )
    assert code == 0
    assert out["dense_vertex"] == 0 and out["side"] == "out"
    assert out["bound_achieved"] is False
    code, _, err = _run(capsys, ["dense", k4, "--a", "1/4", "--eps", "1/10"])
    assert code == 2 and err["error"] == "PreconditionViolated"
    code, _, err = _run(capsys, ["dense", k4, "--a", "zzz", "--eps", "1/10"])
    assert code == 2 and err["error"] == "InvalidParameter"


def test_check(capsys, triangle, k4) -> None:
    code, out, _ = _run(capsys, ["check", triangle])
    assert code == 0
    assert out["chi"] == 2 and out["holds"]["reed"] is True
    code, out, _ = _run(capsys, ["check", k4, "--bound", "eps", "--eps", "1/4"])
    assert code == 0 and out["holds"]["eps"] is True
    code, out, _ = _run(capsys, ["check", triangle, "--bound", "delmin"])
    assert code == 0
    assert out["reduction_chi"] >= out["chi"]
    assert all(out["holds"].values())


def test_hunt(capsys) -> None:
    code, out, _ = _run(
        capsys, ["hunt", "--mode", "exhaustive", "--n-max", "3"]
    )
    assert code == 0
    assert len(out["records"]) == 4  # tournament classes up to 3 vertices
    assert out["violations"] == []
    code, out, _ = _run(
        capsys,
        ["hunt", "--count", "5", "--n-max", "4", "--seed", "9", "--bound", "eps"],
    )
    assert code == 0 and len(out["records"]) == 5
    assert out["eps"] == "1/2"


def test_gen_roundtrip(capsys, tmp_path) -> None:
    out_path = tmp_path / "gen.dgf"
    code, out, _ = _run(
        capsys, ["gen", "obstruction", "5", "2", "-o", str(out_path)]
    )
    assert code == 0 and out["written"] == str(out_path)
    d = parse_dgf(out_path.read_text(encoding="ascii"))
    assert d.n == 10 and out["arc_count"] == d.arc_count()
    code, out, _ = _run(capsys, ["gen", "cycle", "4"])
    assert code == 0 and out["dgf"] == "n 4\n0 1\n1 2\n2 3\n3 0\n"
    code, out, _ = _run(capsys, ["gen", "random", "5", "0.3", "0.3", "7"])
    assert code == 0 and out["n"] == 5
    code, out, _ = _run(capsys, ["gen", "tournament", "4"])
    assert code == 0 and out["arc_count"] == 6


def test_gen_rejects(capsys) -> None:
    code, _, err = _run(capsys, ["gen", "moebius", "5"])
    assert code == 2 and err["error"] == "InvalidParameter"
    code, _, err = _run(capsys, ["gen", "cycle"])
    assert code == 2 and err["error"] == "InvalidParameter"
    code, _, err = _run(capsys, ["gen", "cycle", "x"])
    assert code == 2 and err["error"] == "InvalidParameter"


def test_error_exit_codes(capsys, tmp_path) -> None:
    code, _, err = _run(capsys, ["params", str(tmp_path / "missing.dgf")])
    assert code == 2 and err["error"] == "OSError"
    broken = tmp_path / "broken.dgf"
    broken.write_text("m 3\n", encoding="ascii")
    code, _, err = _run(capsys, ["params", str(broken)])
    assert code == 2 and err["error"] == "ParseError"
    assert "line 1" in err["message"]


def test_check_violation_exit_code(capsys, tmp_path) -> None:
    # at eps near 1 the min-degree bound collapses towards omega, and the
    # bidirected C5 needs 3 colours against directed clique number 2
    from dichroma.digraph import Graph, symmetric_closure

    c5 = symmetric_closure(Graph(5, [(i, (i + 1) % 5) for i in range(5)]))
    path = tmp_path / "c5.dgf"
    path.write_text(emit_dgf(c5), encoding="ascii")
    code, out, _ = _run(
        capsys, ["check", str(path), "--bound", "delmin", "--eps", "99/100"]
    )
    assert code == 1
    assert out["chi"] == 3 and out["bound"] == 2
    assert out["holds"]["delmin"] is False
