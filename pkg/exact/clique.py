from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple

from core import live_metrics
from core.errors import BudgetExhaustedError
from core.routing import ConflictGraph, Routing, edge_loads
from core.tree import Tree

logger = logging.getLogger(__name__)


@dataclass
class CliqueResult:
    size: int
    members: Tuple[int, ...] = field(default_factory=tuple)
    exact: bool = True
    budget_exhausted: bool = False
    method: str = "branch_and_bound"

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "members": list(self.members),
            "exact": self.exact,
            "budget_exhausted": self.budget_exhausted,
            "method": self.method,
        }


def _color_sort(candidates: int, adj: Tuple[int, ...]) -> Tuple[List[int], List[int]]:
    """Greedy color classes over ``candidates``; vertex order and running class numbers."""
    order: List[int] = []
    bounds: List[int] = []
    uncolored = candidates
    k = 0
    while uncolored:
        k += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(k)
    return order, bounds


class _CliqueSearch:
    def __init__(self, cg: ConflictGraph, deadline: Optional[float]) -> None:
        self.adj = cg.bitsets
        self.deadline = deadline
        self.best: List[int] = []

    def expand(self, clique: List[int], candidates: int) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhaustedError("max clique budget exhausted")
        order, bounds = _color_sort(candidates, self.adj)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(clique) + bound <= len(self.best):
                return
            clique.append(v)
            narrowed = candidates & self.adj[v]
            if narrowed:
                self.expand(clique, narrowed)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            clique.pop()
            candidates &= ~(1 << v)


def _branch_sizes(tree: Tree, v: int) -> List[int]:
    sizes = [tree.subtree_sizes[c] for c in tree.children(v)]
    if v != 0:
        sizes.append(tree.n - tree.subtree_sizes[v])
    return sizes


def _claw_size(sizes: List[int]) -> int:
    a, b, c = sorted(sizes, reverse=True)[:3]
    return a * b + b * c + c * a


def claw_clique(routing: Routing) -> Tuple[int, ...]:
    """Largest clique of paths joining two of three branches at one vertex.

    Such paths pairwise share an edge without a common edge for all of
    them. Empty when no vertex has degree 3 or more.
    """
    tree = routing.tree
    hubs = [v for v in range(tree.n) if tree.degree(v) >= 3]
    if not hubs:
        return ()
    hub = max(hubs, key=lambda v: (_claw_size(_branch_sizes(tree, v)), -v))

    branches = [tree.subtree_vertices(c) for c in tree.children(hub)]
    if hub != 0:
        below = set(tree.subtree_vertices(hub))
        branches.append([u for u in range(tree.n) if u not in below])
    top = sorted(branches, key=len, reverse=True)[:3]
    return tuple(sorted(routing.index_of(u, w) for x, y in combinations(top, 2) for u in x for w in y))


def max_clique(cg: ConflictGraph, budget_ms: Optional[int] = None, *, use_edge_loads: bool = True) -> CliqueResult:
    """Clique number of a conflict graph.

    For graphs carrying their tree routing a maximum clique is either the
    paths through one edge or a claw of paths between three branches at one
    vertex, so the answer is the larger of the two closed forms.
    Otherwise a colour-bounded branch and bound runs until the budget ends.
    """
    if cg.order == 0:
        return CliqueResult(size=0, method="empty")

    if use_edge_loads and cg.routing is not None and cg.routing.tree.n >= 2:
        loads = edge_loads(cg.routing, cg.routing.tree)
        edge = max(loads, key=lambda e: (loads[e], -e))
        members = tuple(cg.routing.edge_buckets[edge].tolist())
        claw = claw_clique(cg.routing)
        if len(claw) > len(members):
            return CliqueResult(size=len(claw), members=claw, method="claw")
        return CliqueResult(size=len(members), members=members, method="edge_load")

    deadline = time.monotonic() + budget_ms / 1000.0 if budget_ms is not None else None
    search = _CliqueSearch(cg, deadline)
    search.best = [0]
    exhausted = False
    with live_metrics.timed("max_clique"):
        try:
            search.expand([], (1 << cg.order) - 1)
        except BudgetExhaustedError:
            exhausted = True
            live_metrics.on_budget_exhausted()
            logger.warning("Max clique search stopped at budget; best so far %s", len(search.best))
    members = tuple(sorted(search.best))
    return CliqueResult(size=len(members), members=members, exact=not exhausted, budget_exhausted=exhausted)
