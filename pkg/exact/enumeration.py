from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from core.errors import InvalidParameterError
from core.tree import Tree

logger = logging.getLogger(__name__)

Adjacency = Tuple[Tuple[int, ...], ...]


def _rooted_code(adj: Adjacency, v: int, parent: int) -> str:
    return "(" + "".join(sorted(_rooted_code(adj, u, v) for u in adj[v] if u != parent)) + ")"


def centroids(adj: Adjacency) -> List[int]:
    """Vertices whose largest remaining branch is smallest (one or two of them)."""
    n = len(adj)
    order, parent = [0], [-1] * n
    for v in order:
        for u in adj[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    heaviest = [max([n - size[v]] + [size[u] for u in adj[v] if u != parent[v]]) for v in range(n)]
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def canonical_code(adj: Adjacency) -> str:
    """Isomorphism invariant of a free tree: least centroid-rooted AHU code."""
    return min(_rooted_code(adj, c, -1) for c in centroids(adj))


def _add_leaf(adj: Adjacency, v: int) -> Adjacency:
    leaf = len(adj)
    grown = [list(nbrs) for nbrs in adj]
    grown[v].append(leaf)
    grown.append([v])
    return tuple(tuple(nbrs) for nbrs in grown)


def _to_tree(adj: Adjacency) -> Tree:
    root = min(centroids(adj), key=lambda c: (_rooted_code(adj, c, -1), c))
    children: List[List[int]] = [[] for _ in adj]
    stack = [(root, -1)]
    while stack:
        v, parent = stack.pop()
        kids = sorted((u for u in adj[v] if u != parent), key=lambda u: (_rooted_code(adj, u, v), u))
        children[v] = kids
        stack.extend((u, v) for u in kids)
    return Tree.from_children(children, root)


def enumerate_small_trees(n: int) -> List[Tree]:
    """All non-isomorphic free trees on n vertices, ordered by canonical code.

    Grown one leaf at a time from the single vertex, attaching the new leaf
    to one vertex of each rooted type and keeping one tree per code.
    """
    if not 2 <= n <= 10:
        raise InvalidParameterError(f"tree enumeration supports 2 <= n <= 10, got {n}")

    level: Dict[str, Adjacency] = {"()": ((),)}
    for _ in range(1, n):
        grown: Dict[str, Adjacency] = {}
        for adj in level.values():
            types: Dict[str, int] = {}
            for v in range(len(adj)):
                types.setdefault(_rooted_code(adj, v, -1), v)
            for v in types.values():
                child = _add_leaf(adj, v)
                grown.setdefault(canonical_code(child), child)
        level = grown

    trees = [_to_tree(level[code]) for code in sorted(level)]
    logger.debug("Enumerated %s trees on %s vertices", len(trees), n)
    return trees
