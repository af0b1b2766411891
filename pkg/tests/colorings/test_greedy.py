from __future__ import annotations

import pytest

from colorings.base import Method
from colorings.greedy import GreedyOrder, greedy_coloring, greedy_order
from core.routing import ConflictGraph, all_pairs_routing, conflict_graph
from core.tree import build_complete_mary_tree


def path_graph(h: int) -> ConflictGraph:
    return conflict_graph(all_pairs_routing(build_complete_mary_tree(1, h)))


@pytest.mark.parametrize("h", range(1, 13))
def test_first_fit_is_optimal_on_paths(h: int) -> None:
    wa = greedy_coloring(path_graph(h), GreedyOrder.CANONICAL)

    assert wa.num_colors == ((h + 1) // 2) * ((h + 2) // 2)
    assert wa.method is Method.GREEDY


@pytest.mark.slow
def test_first_fit_is_optimal_on_long_paths() -> None:
    for h in range(13, 51):
        assert greedy_coloring(path_graph(h)).num_colors == ((h + 1) // 2) * ((h + 2) // 2)


def test_edgeless_graph_needs_one_color() -> None:
    wa = greedy_coloring(ConflictGraph.from_edges(4, []))

    assert wa.num_colors == 1
    assert wa.routing is None
    assert wa.as_dict()["paths"][0] == {"index": 0, "color": 0}


def test_degree_order_on_binary_tree() -> None:
    cg = conflict_graph(all_pairs_routing(build_complete_mary_tree(2, 2)))
    wa = greedy_coloring(cg, "degree_desc")

    assert 12 <= wa.num_colors <= 21
    assert wa.meta == {"order": "degree_desc"}
    assert wa.proper


def test_greedy_order_sorts_by_degree_then_index() -> None:
    cg = ConflictGraph.from_edges(4, [(0, 3), (1, 3), (2, 3), (1, 2)])

    assert greedy_order(cg, GreedyOrder.CANONICAL) == [0, 1, 2, 3]
    assert greedy_order(cg, GreedyOrder.DEGREE_DESC) == [3, 1, 2, 0]
