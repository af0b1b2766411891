from __future__ import annotations

import json
from fractions import Fraction

import pytest

from cli.commands import table_row
from cli.main import main


def rows_of(capsys: pytest.CaptureFixture, *argv: str):
    assert main(["table", *argv]) == 0
    return json.loads(capsys.readouterr().out)["data"]


def test_small_grid(capsys) -> None:
    rows = rows_of(capsys, "--m-range", "1..4", "--h-range", "1..2")

    assert len(rows) == 8
    assert [(r["m"], r["h"]) for r in rows] == [(m, h) for m in range(1, 5) for h in (1, 2)]
    row = next(r for r in rows if (r["m"], r["h"]) == (3, 2))
    assert (row["w"], row["pi"], row["ratio"]) == (48, 36, "4/3")
    assert all(r["proper"] is True and r["constructive"] == r["w"] for r in rows)


def test_binary_row() -> None:
    row = table_row(2, 3, max_paths=50_000)

    assert (row["w"], row["pi"], row["edge_cut"], row["vertex_cut"]) == (57, 56, 56, 57)
    assert Fraction(row["ratio"]) == Fraction(57, 56)


def test_rows_above_the_cap_are_skipped() -> None:
    row = table_row(3, 3, max_paths=100)

    assert row["constructive"] == "skipped"
    assert row["proper"] == "skipped"
    assert row["w"] == 507


def test_table_is_deterministic(capsys) -> None:
    args = ("--m-range", "1..3", "--h-range", "1..2", "--format", "csv")
    assert main(["table", *args]) == 0
    first = capsys.readouterr().out
    assert main(["table", *args]) == 0

    assert capsys.readouterr().out == first
    assert first.splitlines()[0] == "m,h,n,paths,w,constructive,proper,edge_cut,vertex_cut,pi,ratio"


def test_table_needs_ranges(capsys) -> None:
    assert main(["table", "--m-range", "0..2", "--h-range", "1..2"]) == 2
    assert main(["table", "--m-range", "3..1", "--h-range", "1..2"]) == 2
