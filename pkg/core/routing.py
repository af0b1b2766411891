from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import InvalidParameterError
from core.tree import Tree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Path:
    u: int
    v: int
    edges: FrozenSet[int]

    @property
    def length(self) -> int:
        return len(self.edges)

    def conflicts_with(self, other: "Path") -> bool:
        return not self.edges.isdisjoint(other.edges)


def tree_path(tree: Tree, u: int, v: int) -> Path:
    """The unique u-v route: symmetric difference of the two root chains."""
    tree.check_vertex(u)
    tree.check_vertex(v)
    if u == v:
        raise InvalidParameterError(f"a path needs two distinct terminals, got u=v={u}")
    if u > v:
        u, v = v, u
    chains = tree.root_chains
    return Path(u, v, chains[u] ^ chains[v])


def bfs_route(tree: Tree, u: int, v: int) -> FrozenSet[int]:
    """Edge ids of the u-v route found by networkx BFS; oracle for ``tree_path``."""
    import networkx as nx

    route = nx.shortest_path(tree.to_networkx(), u, v)
    return frozenset(max(a, b) for a, b in zip(route, route[1:]))


@dataclass(frozen=True)
class Routing:
    """All-to-all routing of a tree, paths in (u, v)-lexicographic order."""

    tree: Tree
    paths: Tuple[Path, ...]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __getitem__(self, i: int) -> Path:
        return self.paths[i]

    def index_of(self, u: int, v: int) -> int:
        if u == v:
            raise InvalidParameterError(f"no path from {u} to itself")
        if u > v:
            u, v = v, u
        n = self.tree.n
        return u * (2 * n - u - 1) // 2 + (v - u - 1)

    def path_lengths(self) -> np.ndarray:
        return np.fromiter((p.length for p in self.paths), dtype=np.int64, count=len(self.paths))

    @cached_property
    def edge_buckets(self) -> Dict[int, np.ndarray]:
        """Path indices crossing each edge, ascending."""
        buckets: Dict[int, List[int]] = {e: [] for e in self.tree.edges()}
        for i, path in enumerate(self.paths):
            for e in path.edges:
                buckets[e].append(i)
        return {e: np.asarray(idx, dtype=np.int64) for e, idx in buckets.items()}


def all_pairs_routing(tree: Tree, *, allow_empty: bool = False) -> Routing:
    n = tree.n
    if n < 2 and not allow_empty:
        raise InvalidParameterError(f"routing needs at least two vertices, {tree.tag} has n={n}")
    chains = tree.root_chains
    paths = tuple(Path(u, v, chains[u] ^ chains[v]) for u in range(n) for v in range(u + 1, n))
    logger.debug("Routed %s: %s paths", tree.tag, len(paths))
    return Routing(tree=tree, paths=paths)


def edge_loads(routing: Routing, tree: Tree) -> Dict[int, int]:
    """Number of routed paths through every edge."""
    if routing.tree is not tree and routing.tree.parents != tree.parents:
        raise InvalidParameterError(f"routing was built for {routing.tree.tag}, not {tree.tag}")
    if not routing.paths:
        return {e: 0 for e in tree.edges()}
    flat = np.fromiter((e for p in routing.paths for e in p.edges), dtype=np.int64)
    counts = np.bincount(flat, minlength=tree.n)
    return {e: int(counts[e]) for e in tree.edges()}


@dataclass(frozen=True)
class ConflictGraph:
    """Paths as vertices, adjacent when they share an edge."""

    order: int
    adjacency: Tuple[FrozenSet[int], ...]
    routing: Optional[Routing] = field(default=None, compare=False)

    def neighbors(self, i: int) -> FrozenSet[int]:
        return self.adjacency[i]

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edges(self) -> Iterator[Tuple[int, int]]:
        for i, nbrs in enumerate(self.adjacency):
            for j in sorted(nbrs):
                if i < j:
                    yield i, j

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @cached_property
    def bitsets(self) -> Tuple[int, ...]:
        """Adjacency rows as Python int bitsets."""
        rows = []
        for nbrs in self.adjacency:
            bits = 0
            for j in nbrs:
                bits |= 1 << j
            rows.append(bits)
        return tuple(rows)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "ConflictGraph":
        if order < 0:
            raise InvalidParameterError(f"order must be >= 0, got {order}")
        adj: List[set] = [set() for _ in range(order)]
        for i, j in edges:
            if not (0 <= i < order and 0 <= j < order):
                raise InvalidParameterError(f"edge ({i}, {j}) out of range for order {order}")
            if i == j:
                raise InvalidParameterError(f"self-loop on {i}")
            adj[i].add(j)
            adj[j].add(i)
        return cls(order=order, adjacency=tuple(frozenset(a) for a in adj))


def conflict_graph(routing: Routing) -> ConflictGraph:
    adj: List[set] = [set() for _ in range(len(routing))]
    for bucket in routing.edge_buckets.values():
        members = bucket.tolist()
        for i in members:
            adj[i].update(members)
    for i, nbrs in enumerate(adj):
        nbrs.discard(i)
    cg = ConflictGraph(order=len(routing), adjacency=tuple(frozenset(a) for a in adj), routing=routing)
    logger.debug("Conflict graph of %s: %s vertices, %s edges", routing.tree.tag, cg.order, cg.edge_count)
    return cg
