from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from core.errors import InvalidParameterError
from core.routing import (
    ConflictGraph,
    all_pairs_routing,
    bfs_route,
    conflict_graph,
    edge_loads,
    tree_path,
)
from core.tree import Tree, build_complete_mary_tree, build_spider


def test_routing_order_and_index(binary_h2: Tree) -> None:
    routing = all_pairs_routing(binary_h2)

    assert len(routing) == 21
    assert [(p.u, p.v) for p in routing][:3] == [(0, 1), (0, 2), (0, 3)]
    for i, path in enumerate(routing):
        assert routing.index_of(path.u, path.v) == i
        assert routing.index_of(path.v, path.u) == i


def test_tree_path_matches_networkx_bfs(binary_h2: Tree) -> None:
    for u, v in combinations(range(binary_h2.n), 2):
        assert tree_path(binary_h2, u, v).edges == bfs_route(binary_h2, u, v)

    leaf_to_leaf = tree_path(binary_h2, 6, 3)
    assert (leaf_to_leaf.u, leaf_to_leaf.v) == (3, 6)
    assert leaf_to_leaf.length == 4


def test_tree_path_rejects_degenerate_requests(binary_h2: Tree) -> None:
    with pytest.raises(InvalidParameterError):
        tree_path(binary_h2, 2, 2)
    with pytest.raises(InvalidParameterError):
        tree_path(binary_h2, 0, 7)


def test_single_vertex_routing() -> None:
    lone = build_complete_mary_tree(3, 0)

    with pytest.raises(InvalidParameterError):
        all_pairs_routing(lone)
    assert len(all_pairs_routing(lone, allow_empty=True)) == 0


def test_edge_loads_are_a_times_n_minus_a() -> None:
    tree = build_spider(3, 4)
    loads = edge_loads(all_pairs_routing(tree), tree)
    sizes = tree.subtree_sizes

    assert loads == {e: sizes[e] * (tree.n - sizes[e]) for e in tree.edges()}


def test_edge_buckets_and_lengths(binary_h2: Tree) -> None:
    routing = all_pairs_routing(binary_h2)

    assert routing.edge_buckets[1].size == 12
    assert np.all(np.diff(routing.edge_buckets[1]) > 0)
    assert int(routing.path_lengths().sum()) == sum(len(b) for b in routing.edge_buckets.values())


def test_conflict_graph_matches_pairwise_check(binary_h2: Tree) -> None:
    routing = all_pairs_routing(binary_h2)
    cg = conflict_graph(routing)

    expected = {(i, j) for i, j in combinations(range(len(routing)), 2) if routing[i].conflicts_with(routing[j])}
    assert set(cg.edges()) == expected
    assert cg.edge_count == len(expected)
    for i in range(cg.order):
        assert cg.bitsets[i] == sum(1 << j for j in cg.neighbors(i))


def test_conflict_graph_from_edges_validation() -> None:
    cg = ConflictGraph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert cg.edge_count == 2
    assert cg.degree(1) == 2

    with pytest.raises(InvalidParameterError):
        ConflictGraph.from_edges(2, [(0, 2)])
    with pytest.raises(InvalidParameterError):
        ConflictGraph.from_edges(2, [(1, 1)])


def test_edge_loads_refuses_a_foreign_routing(binary_h2: Tree) -> None:
    with pytest.raises(InvalidParameterError):
        edge_loads(all_pairs_routing(binary_h2), build_spider(2, 3))
