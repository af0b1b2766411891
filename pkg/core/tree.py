from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.errors import InvalidParameterError

logger = logging.getLogger(__name__)

Address = Tuple[int, ...]


class SpiderShape(str, Enum):
    PATH = "path"
    STAR = "star"
    FULL_MARY = "full_mary_if_applicable"


@dataclass(frozen=True)
class Tree:
    """Rooted tree with breadth-first vertex ids.

    Vertex 0 is the root. Every other vertex ``v`` owns the edge to its
    parent and that edge is identified by ``v``.
    """

    n: int
    parents: Tuple[int, ...]
    labels: Optional[Tuple[Address, ...]] = None
    family: str = "explicit"
    params: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f"a tree needs at least one vertex, got n={self.n}")
        if len(self.parents) != self.n:
            raise InvalidParameterError(f"expected {self.n} parent entries, got {len(self.parents)}")
        if self.parents[0] != -1:
            raise InvalidParameterError("vertex 0 must be the root (parent -1)")
        for v in range(1, self.n):
            p = self.parents[v]
            if not 0 <= p < v:
                raise InvalidParameterError(f"vertex {v} has parent {p}; ids must be breadth-first")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidParameterError("labels must cover every vertex")

    @classmethod
    def from_children(
        cls,
        children: Sequence[Sequence[int]],
        root: int = 0,
        *,
        family: str = "explicit",
        params: Optional[Dict[str, Any]] = None,
        labels: Optional[Sequence[Address]] = None,
    ) -> "Tree":
        """Renumber an arbitrary rooted child structure in breadth-first order.

        Children are visited in the order given, so callers control the
        numbering by ordering the child lists.
        """
        order: List[int] = []
        parent_of: Dict[int, int] = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for c in children[v]:
                if c in parent_of:
                    raise InvalidParameterError(f"vertex {c} reached twice; child lists do not form a tree")
                parent_of[c] = v
                queue.append(c)
        if len(order) != len(children):
            raise InvalidParameterError("child lists are not connected")
        new_id = {old: i for i, old in enumerate(order)}
        parents = tuple(-1 if parent_of[old] == -1 else new_id[parent_of[old]] for old in order)
        new_labels = tuple(labels[old] for old in order) if labels is not None else None
        return cls(n=len(order), parents=parents, labels=new_labels, family=family, params=dict(params or {}))

    @classmethod
    def from_parents(cls, parents: Sequence[Optional[int]]) -> "Tree":
        """Build an ``explicit`` tree from a parent list (root marked by None or -1)."""
        n = len(parents)
        roots = [v for v, p in enumerate(parents) if p is None or p == -1]
        if len(roots) != 1:
            raise InvalidParameterError(f"expected exactly one root, found {len(roots)}")
        children: List[List[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parents):
            if p is None or p == -1:
                continue
            if not 0 <= p < n or p == v:
                raise InvalidParameterError(f"invalid parent {p} for vertex {v}")
            children[p].append(v)
        return cls.from_children(children, roots[0])

    @property
    def tag(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({','.join(str(v) for v in self.params.values())})"

    @cached_property
    def depths(self) -> Tuple[int, ...]:
        depth = [0] * self.n
        for v in range(1, self.n):
            depth[v] = depth[self.parents[v]] + 1
        return tuple(depth)

    @cached_property
    def _children(self) -> Tuple[Tuple[int, ...], ...]:
        kids: List[List[int]] = [[] for _ in range(self.n)]
        for v in range(1, self.n):
            kids[self.parents[v]].append(v)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def _label_index(self) -> Dict[Address, int]:
        if self.labels is None:
            return {}
        return {label: v for v, label in enumerate(self.labels)}

    def children(self, v: int) -> Tuple[int, ...]:
        return self._children[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        if v == 0:
            return self._children[v]
        return (self.parents[v],) + self._children[v]

    def degree(self, v: int) -> int:
        return len(self._children[v]) + (0 if v == 0 else 1)

    def depth(self, v: int) -> int:
        return self.depths[v]

    def edges(self) -> range:
        """Edge ids, i.e. every non-root vertex."""
        return range(1, self.n)

    def edge_endpoints(self, e: int) -> Tuple[int, int]:
        return self.parents[e], e

    def leaves(self) -> List[int]:
        return [v for v in range(self.n) if not self._children[v] and (v != 0 or self.n == 1)]

    @cached_property
    def subtree_sizes(self) -> Tuple[int, ...]:
        """Vertices below (and including) each vertex."""
        size = [1] * self.n
        for v in range(self.n - 1, 0, -1):
            size[self.parents[v]] += size[v]
        return tuple(size)

    def subtree_vertices(self, v: int) -> List[int]:
        out = [v]
        i = 0
        while i < len(out):
            out.extend(self._children[out[i]])
            i += 1
        return sorted(out)

    def vertex_of(self, address: Address) -> int:
        try:
            return self._label_index[tuple(address)]
        except KeyError:
            raise InvalidParameterError(f"no vertex with address {address!r} in {self.tag}") from None

    def label(self, v: int) -> Address:
        if self.labels is None:
            raise InvalidParameterError(f"{self.tag} carries no vertex addresses")
        return self.labels[v]

    @cached_property
    def root_chains(self) -> Tuple[frozenset, ...]:
        """For each vertex, the edge ids on its route to the root."""
        chains: List[frozenset] = [frozenset()]
        for v in range(1, self.n):
            chains.append(chains[self.parents[v]] | {v})
        return tuple(chains)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidParameterError(f"vertex {v} out of range for {self.tag} with n={self.n}")

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((self.parents[v], v) for v in range(1, self.n))
        return g


def mary_size(m: int, h: int) -> int:
    if m == 1:
        return h + 1
    return (m ** (h + 1) - 1) // (m - 1)


def geometric_count(m: int, j: int) -> int:
    """1 + m + ... + m^(j-1); zero for j = 0."""
    if j <= 0:
        return 0
    if m == 1:
        return j
    return (m ** j - 1) // (m - 1)


def mary_addresses(m: int, h: int, prefix: Address = ()) -> List[Address]:
    """Addresses of a complete m-ary subtree below ``prefix`` in breadth-first order."""
    out: List[Address] = [prefix]
    frontier: List[Address] = [prefix]
    for _ in range(h):
        frontier = [w + (d,) for w in frontier for d in range(1, m + 1)]
        out.extend(frontier)
    return out


def build_complete_mary_tree(m: int, h: int) -> Tree:
    if m < 1:
        raise InvalidParameterError(f"m must be >= 1, got {m}")
    if h < 0:
        raise InvalidParameterError(f"h must be >= 0, got {h}")

    labels = mary_addresses(m, h)
    index = {w: i for i, w in enumerate(labels)}
    parents = tuple(-1 if not w else index[w[:-1]] for w in labels)
    tree = Tree(n=len(labels), parents=parents, labels=tuple(labels), family="mary", params={"m": m, "h": h})
    logger.debug("Built %s with %s vertices", tree.tag, tree.n)
    return tree


def _full_mary_height(k: int, t: int) -> Optional[int]:
    """Height j with t = 1 + k + ... + k^j, if any."""
    if k == 1:
        return t - 1
    total, power, j = 1, 1, 0
    while total < t:
        power *= k
        total += power
        j += 1
    return j if total == t else None


def build_spider(k: int, t: int, shape: SpiderShape | str = SpiderShape.PATH) -> Tree:
    """Root of degree k whose removal leaves k components of t vertices."""
    if k < 1 or t < 1:
        raise InvalidParameterError(f"k and t must be >= 1, got k={k}, t={t}")
    shape = SpiderShape(shape)

    if shape is SpiderShape.FULL_MARY:
        j = _full_mary_height(k, t)
        if j is None:
            raise InvalidParameterError(f"t={t} is not 1 + {k} + ... + {k}^j for any j")
        component = mary_addresses(k, j)
    else:
        component = []

    children: List[List[int]] = [[]]
    for _ in range(k):
        head = len(children)
        children[0].append(head)
        if shape is SpiderShape.PATH:
            for i in range(t):
                children.append([head + i + 1] if i + 1 < t else [])
        elif shape is SpiderShape.STAR:
            children.append([head + i for i in range(1, t)])
            children.extend([] for _ in range(t - 1))
        else:
            local = {w: head + i for i, w in enumerate(component)}
            for w in component:
                children.append([local[w + (d,)] for d in range(1, k + 1) if w + (d,) in local])

    tree = Tree.from_children(children, 0, family="spider", params={"k": k, "t": t, "shape": shape.value})
    logger.debug("Built %s with %s vertices", tree.tag, tree.n)
    return tree


def build_double_tree(m: int, h: int) -> Tree:
    """Two copies of T_{m,h-1} whose roots a (vertex 0) and b (vertex 1) are joined.

    A-side vertices carry address ``(1, *w)`` and B-side vertices ``(2, *w)``.
    """
    if m < 2:
        raise InvalidParameterError(f"double trees need m >= 2, got {m}")
    if h < 1:
        raise InvalidParameterError(f"double trees need h >= 1, got {h}")

    labels: List[Address] = []
    for depth_addresses in _levels(m, h - 1):
        labels.extend((1,) + w for w in depth_addresses)
        labels.extend((2,) + w for w in depth_addresses)
    index = {w: i for i, w in enumerate(labels)}
    parents = tuple(-1 if w == (1,) else (0 if w == (2,) else index[w[:-1]]) for w in labels)
    tree = Tree(n=len(labels), parents=parents, labels=tuple(labels), family="double", params={"m": m, "h": h})
    logger.debug("Built %s with %s vertices", tree.tag, tree.n)
    return tree


def _levels(m: int, h: int) -> List[List[Address]]:
    levels: List[List[Address]] = [[()]]
    for _ in range(h):
        levels.append([w + (d,) for w in levels[-1] for d in range(1, m + 1)])
    return levels
