from __future__ import annotations

import json
from typing import Any, Dict, List

from core.errors import InvalidParameterError
from core.routing import ConflictGraph
from core.tree import Tree


def tree_to_dict(tree: Tree) -> Dict[str, Any]:
    return {
        "family": tree.family,
        "params": dict(tree.params),
        "n": tree.n,
        "parents": [None if p == -1 else p for p in tree.parents],
        "labels": [list(w) for w in tree.labels] if tree.labels is not None else None,
    }


def tree_from_dict(doc: Dict[str, Any]) -> Tree:
    try:
        parents = [-1 if p is None else int(p) for p in doc["parents"]]
        n = int(doc.get("n", len(parents)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameterError(f"malformed tree document: {exc}") from exc
    labels = doc.get("labels")
    return Tree(
        n=n,
        parents=tuple(parents),
        labels=tuple(tuple(w) for w in labels) if labels is not None else None,
        family=doc.get("family", "explicit"),
        params=dict(doc.get("params") or {}),
    )


def _dot_label(tree: Tree, v: int) -> str:
    if tree.labels is None:
        return str(v)
    w = tree.labels[v]
    if tree.family == "double":
        side = "a" if w[0] == 1 else "b"
        return side + (("_" + ".".join(map(str, w[1:]))) if len(w) > 1 else "")
    return "r" + (("_" + ".".join(map(str, w))) if w else "")


def tree_to_dot(tree: Tree) -> str:
    """Graphviz source, nodes and edges in vertex-id order."""
    lines: List[str] = [f'graph "{tree.tag}" {{']
    for v in range(tree.n):
        lines.append(f'  {v} [label="{_dot_label(tree, v)}"];')
    for e in tree.edges():
        lines.append(f"  {tree.parents[e]} -- {e};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def conflict_graph_to_dict(cg: ConflictGraph) -> Dict[str, Any]:
    return {"order": cg.order, "edges": [[i, j] for i, j in cg.edges()]}


def conflict_graph_from_dict(doc: Dict[str, Any]) -> ConflictGraph:
    try:
        order = int(doc["order"])
        edges = [(int(i), int(j)) for i, j in doc.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameterError(f"malformed conflict graph document: {exc}") from exc
    return ConflictGraph.from_edges(order, edges)


def dumps(payload: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
