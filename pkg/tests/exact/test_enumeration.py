from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from core.errors import InvalidParameterError
from core.tree import Tree
from exact.enumeration import canonical_code, centroids, enumerate_small_trees

# free trees on n vertices, n = 2..10
KNOWN_COUNTS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def adjacency(tree: Tree):
    return tuple(tree.neighbors(v) for v in range(tree.n))


@pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
def test_counts_match_unlabeled_tree_sequence(n: int, count: int) -> None:
    trees = enumerate_small_trees(n)

    assert len(trees) == count
    assert len({canonical_code(adjacency(t)) for t in trees}) == count
    assert all(t.n == n and nx.is_tree(t.to_networkx()) for t in trees)


def test_four_vertices_give_path_and_star() -> None:
    degrees = sorted(max(t.degree(v) for v in range(t.n)) for t in enumerate_small_trees(4))

    assert degrees == [2, 3]


@pytest.mark.parametrize("n", range(4, 8))
def test_trees_are_pairwise_non_isomorphic(n: int) -> None:
    graphs = [t.to_networkx() for t in enumerate_small_trees(n)]

    assert not any(nx.is_isomorphic(a, b) for a, b in combinations(graphs, 2))


def test_trees_are_rooted_at_a_centroid() -> None:
    for tree in enumerate_small_trees(8):
        assert 0 in centroids(adjacency(tree))


def test_enumeration_is_deterministic() -> None:
    assert [t.parents for t in enumerate_small_trees(7)] == [t.parents for t in enumerate_small_trees(7)]


@pytest.mark.parametrize("n", [0, 1, 11])
def test_out_of_range_sizes(n: int) -> None:
    with pytest.raises(InvalidParameterError):
        enumerate_small_trees(n)
