from __future__ import annotations

import pytest

from colorings.base import Method, WavelengthAssignment, finalize_assignment, graph_violations, verify_assignment
from colorings.dispatch import color_mary
from core.errors import InvalidParameterError, VerificationError
from core.routing import ConflictGraph, all_pairs_routing
from core.tree import build_complete_mary_tree


def test_constructed_binary_assignment_is_proper() -> None:
    wa = color_mary(2, 2)
    report = verify_assignment(wa.routing, wa)

    assert report.proper
    assert report.violations == []
    assert report.num_colors == 12


def test_single_color_on_t21_has_two_violations() -> None:
    routing = all_pairs_routing(build_complete_mary_tree(2, 1))
    wa = WavelengthAssignment(colors=(0, 0, 0), num_colors=1, method=Method.GREEDY, routing=routing)

    report = verify_assignment(routing, wa)

    assert not report.proper
    assert report.violations == [(0, 2), (1, 2)]
    assert report.as_dict()["violations"] == [[0, 2], [1, 2]]


def test_empty_routing_is_trivially_proper() -> None:
    routing = all_pairs_routing(build_complete_mary_tree(3, 0), allow_empty=True)
    wa = WavelengthAssignment(colors=(), num_colors=0, method=Method.TABLE_BASE, routing=routing)

    report = verify_assignment(routing, wa)

    assert report.proper
    assert report.num_colors == 0


def test_missing_paths_are_rejected() -> None:
    routing = all_pairs_routing(build_complete_mary_tree(2, 1))
    wa = WavelengthAssignment(colors=(0, 1), num_colors=2, method=Method.GREEDY, routing=routing)

    with pytest.raises(InvalidParameterError):
        verify_assignment(routing, wa)


def test_finalize_refuses_improper_or_gappy_colorings() -> None:
    routing = all_pairs_routing(build_complete_mary_tree(2, 1))

    with pytest.raises(VerificationError) as excinfo:
        finalize_assignment(routing, [0, 0, 0], Method.GREEDY)
    assert excinfo.value.violations == [(0, 2), (1, 2)]

    with pytest.raises(VerificationError):
        finalize_assignment(routing, [0, 2, 3], Method.GREEDY)

    with pytest.raises(InvalidParameterError):
        finalize_assignment(None, [0], Method.GREEDY)


def test_graph_violations() -> None:
    cg = ConflictGraph.from_edges(3, [(0, 1), (1, 2)])

    assert graph_violations(cg, [0, 0, 1]) == [(0, 1)]
    assert graph_violations(cg, [0, 1, 0]) == []


def test_assignment_document_and_frame() -> None:
    wa = color_mary(2, 1)
    doc = wa.as_dict()

    assert doc["family"] == "mary"
    assert (doc["m"], doc["h"]) == (2, 1)
    assert doc["num_colors"] == 2
    assert doc["proper"] is True
    assert doc["method"] == "table_base"
    assert doc["paths"][2] == {"u": 1, "v": 2, "color": wa.color_of(2, 1)}
    assert list(wa.as_frame().columns) == ["u", "v", "color"]
    assert len(wa.as_frame()) == 3
