from __future__ import annotations

import json

import pytest

from core.errors import InvalidParameterError
from core.routing import all_pairs_routing, conflict_graph
from core.serialization import (
    conflict_graph_from_dict,
    conflict_graph_to_dict,
    dumps,
    tree_from_dict,
    tree_to_dict,
    tree_to_dot,
)
from core.tree import build_complete_mary_tree, build_double_tree


def test_tree_document_keeps_labels_and_params() -> None:
    tree = build_complete_mary_tree(3, 2)
    doc = tree_to_dict(tree)

    assert doc["parents"][0] is None
    assert doc["params"] == {"m": 3, "h": 2}
    assert tree_from_dict(json.loads(dumps(doc))) == tree


def test_tree_document_rejects_garbage() -> None:
    with pytest.raises(InvalidParameterError):
        tree_from_dict({"n": 3})
    with pytest.raises(InvalidParameterError):
        tree_from_dict({"parents": [None, "x"]})


def test_dot_output_names_roots_and_sides() -> None:
    dot = tree_to_dot(build_double_tree(2, 2))

    assert dot.startswith('graph "double(2,2)" {')
    assert '0 [label="a"]' in dot
    assert '4 [label="b_1"]' in dot
    assert "  1 -- 4;" in dot
    assert 'label="r_1"' in tree_to_dot(build_complete_mary_tree(2, 1))


def test_conflict_graph_document() -> None:
    cg = conflict_graph(all_pairs_routing(build_complete_mary_tree(2, 1)))
    doc = conflict_graph_to_dict(cg)

    assert doc == {"order": 3, "edges": [[0, 2], [1, 2]]}
    assert set(conflict_graph_from_dict(doc).edges()) == set(cg.edges())
    with pytest.raises(InvalidParameterError):
        conflict_graph_from_dict({"edges": []})


def test_dumps_is_canonical() -> None:
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
