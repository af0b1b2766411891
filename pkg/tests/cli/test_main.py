from __future__ import annotations

import io
import json
import sys
from pathlib import Path

import pytest

import cli.commands as commands
from cli.main import main
from core.errors import VerificationError


def run(capsys: pytest.CaptureFixture, *argv: str):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys: pytest.CaptureFixture, *argv: str):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_build_ternary_tree_as_dot(capsys) -> None:
    code, out = run(capsys, "build", "--family", "mary", "-m", "3", "-H", "3", "--format", "dot")

    assert code == 0
    assert out.startswith('graph "mary(3,3)" {')
    assert out.count("[label=") == 40


def test_build_double_tree_json(capsys) -> None:
    code, doc = run_json(capsys, "build", "--family", "double", "-m", "4", "-H", "2")

    assert code == 0
    assert doc["meta"]["command"] == "build"
    assert doc["data"]["n"] == 10
    assert doc["data"]["family"] == "double"


def test_invalid_parameters_exit_2(capsys) -> None:
    assert main(["build", "--family", "mary", "-m", "0", "-H", "1"]) == 2
    assert main(["designs", "--kind", "total", "-n", "4"]) == 2
    assert main(["bounds", "-m", "2", "-H", "2", "--format", "csv"]) == 2
    assert main(["color", "--family", "spider", "-k", "4", "-t", "2"]) == 2
    assert main(["color", "-m", "3", "-H", "3", "--method", "greedy", "--max-paths-greedy", "10"]) == 2
    assert capsys.readouterr().out == ""


def test_conflict_graph_has_no_dot_output(capsys) -> None:
    code = main(["build", "--family", "mary", "-m", "2", "-H", "1", "--conflict-graph", "--format", "dot"])

    assert code == 2
    assert capsys.readouterr().out == ""


def test_color_construct_with_verify(capsys) -> None:
    code, out = run(capsys, "color", "--family", "mary", "-m", "2", "-H", "2", "--verify", "--format", "text")

    assert code == 0
    assert out == "12 colors, proper\n"


def test_color_counts(capsys) -> None:
    assert run(capsys, "color", "-m", "4", "-H", "2", "--format", "text") == (0, "80 colors\n")
    assert run(capsys, "color", "-m", "1", "-H", "6", "--method", "greedy", "--format", "text") == (0, "12 colors\n")
    assert run(capsys, "color", "--family", "spider", "-k", "5", "-t", "2", "--format", "text") == (0, "20 colors\n")
    assert run(capsys, "color", "--family", "double", "-m", "4", "-H", "2", "--format", "text") == (0, "25 colors\n")


def test_color_json_and_csv(capsys) -> None:
    code, doc = run_json(capsys, "color", "-m", "2", "-H", "1")
    assert code == 0
    assert doc["data"]["num_colors"] == 2
    assert doc["data"]["proper"] is True
    assert len(doc["data"]["paths"]) == 3

    code, out = run(capsys, "color", "-m", "2", "-H", "1", "--format", "csv")
    assert out.splitlines()[0] == "u,v,color"
    assert len(out.splitlines()) == 4


def test_verification_failure_exits_3(capsys, monkeypatch: pytest.MonkeyPatch) -> None:
    def broken(m: int, h: int):
        raise VerificationError("boom", [(0, 1)])

    monkeypatch.setattr(commands, "color_mary", broken)

    assert main(["color", "-m", "2", "-H", "2"]) == 3


def test_bounds(capsys) -> None:
    _, doc = run_json(capsys, "bounds", "--family", "mary", "-m", "2", "-H", "3")
    assert (doc["data"]["edge_cut"]["bound"], doc["data"]["vertex_cut"]["bound"], doc["data"]["pi"]) == (56, 57, 56)

    _, doc = run_json(capsys, "bounds", "--family", "spider", "-k", "3", "-t", "4")
    assert doc["data"]["pi"] == doc["data"]["pi_closed_form"] == 36
    assert doc["data"]["vertex_cut"]["bound"] == 48
    assert doc["data"]["load_profile_increasing"] is True

    assert run(capsys, "bounds", "-m", "1", "-H", "2", "--format", "text") == (
        0,
        "mary(1,2): edge_cut 2, vertex_cut 1, pi 2\n",
    )


def test_designs_csv(capsys) -> None:
    code, out = run(capsys, "designs", "--kind", "total", "-n", "5", "--format", "csv")

    assert code == 0
    assert out.splitlines()[0] == "element,color"
    assert len(out.splitlines()) == 1 + 5 + 10

    code, doc = run_json(capsys, "designs", "--kind", "factorization", "-n", "6")
    assert doc["data"]["num_colors"] == 5


def test_certify_exit_codes(capsys) -> None:
    code, out = run(capsys, "certify", "-m", "3", "-H", "2", "--format", "text")
    assert code == 0
    assert out == "T(3,2): lower 48 (vertex_cut) = constructive 48, optimal\n"

    code, doc = run_json(capsys, "certify", "-m", "3", "-H", "2", "--max-paths", "5")
    assert code == 4
    assert doc["data"]["constructive"] is None


def test_oracle_reads_build_output(capsys, tmp_path: Path) -> None:
    graph = tmp_path / "cg.json"
    assert main(["build", "-m", "2", "-H", "1", "--conflict-graph", "--out", str(graph)]) == 0
    capsys.readouterr()

    code, out = run(capsys, "oracle", "--input", str(graph), "--format", "text")

    assert code == 0
    assert out == "chromatic number 2\n"


def test_oracle_reads_stdin(capsys, monkeypatch: pytest.MonkeyPatch) -> None:
    c5 = {"order": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]}
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(c5)))

    code, doc = run_json(capsys, "oracle")

    assert code == 0
    assert doc["data"]["chromatic"]["exact"] == 3
    assert doc["data"]["clique"]["size"] == 2


def test_oracle_rejects_garbage_and_large_graphs(capsys, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(sys, "stdin", io.StringIO("not json"))
    assert main(["oracle"]) == 2

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"order": 50, "edges": []})))
    assert main(["oracle", "--max-exact-vertices", "10"]) == 2


def test_out_writes_file(capsys, tmp_path: Path) -> None:
    target = tmp_path / "nested" / "tree.json"

    assert main(["build", "-m", "2", "-H", "2", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["data"]["n"] == 7
