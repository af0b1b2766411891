from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set

from colorings.base import Method, WavelengthAssignment, finalize_assignment
from colorings.greedy import greedy_coloring
from core import live_metrics
from core.errors import BudgetExhaustedError, InvalidParameterError
from core.routing import ConflictGraph
from exact.clique import max_clique

logger = logging.getLogger(__name__)


@dataclass
class ChromaticResult:
    lower: int
    upper: int
    exact: Optional[int] = None
    witness: Optional[WavelengthAssignment] = None
    budget_exhausted: bool = False
    nodes: int = 0

    def as_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "budget_exhausted": self.budget_exhausted,
            "nodes": self.nodes,
            "witness": list(self.witness.colors) if self.witness is not None else None,
        }


def dsatur_greedy(adj: Sequence[Set[int]]) -> List[int]:
    """One DSATUR pass: most saturated uncolored vertex next, then first fit."""
    n = len(adj)
    colors = [-1] * n
    seen: List[Set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (len(seen[u]), len(adj[u]), -u))
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for u in adj[v]:
            seen[u].add(c)
    return colors


class _DsaturSearch:
    """Branch and bound over DSATUR vertex choices."""

    def __init__(self, adj: Sequence[Set[int]], best: List[int], lower: int, deadline: Optional[float]) -> None:
        self.adj = adj
        self.n = len(adj)
        self.best = list(best)
        self.best_num = max(best) + 1
        self.lower = lower
        self.deadline = deadline
        self.colors = [-1] * self.n
        self.seen: List[Set[int]] = [set() for _ in range(self.n)]
        self.nodes = 0

    def _select(self) -> int:
        cand, key = -1, (-1, -1)
        for v in range(self.n):
            if self.colors[v] < 0:
                k = (len(self.seen[v]), len(self.adj[v]))
                if k > key:
                    cand, key = v, k
        return cand

    def _paint(self, v: int, c: int, current: int, colored: int) -> None:
        self.colors[v] = c
        changed = [u for u in self.adj[v] if self.colors[u] < 0 and c not in self.seen[u]]
        for u in changed:
            self.seen[u].add(c)
        self.backtrack(current, colored + 1)
        for u in changed:
            self.seen[u].discard(c)
        self.colors[v] = -1

    def backtrack(self, current: int, colored: int) -> None:
        if current >= self.best_num or self.best_num <= self.lower:
            return
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhaustedError("chromatic search budget exhausted")
        if colored == self.n:
            self.best_num, self.best = current, list(self.colors)
            logger.debug("Improved coloring: %s colors after %s nodes", current, self.nodes)
            return

        v = self._select()
        for c in range(current):
            if c not in self.seen[v]:
                self._paint(v, c, current, colored)
        if current + 1 < self.best_num:
            self._paint(v, current, current + 1, colored)


def exact_chromatic(
    cg: ConflictGraph, lb_hint: int = 0, ub_hint: int = 0, budget_ms: Optional[int] = None
) -> ChromaticResult:
    """Chromatic number of ``cg`` by DSATUR branch and bound.

    The lower side starts from the clique number and ``lb_hint``; the upper
    side from the better of a DSATUR pass and canonical first fit.
    ``ub_hint`` (0 = none) can only lower the reported upper bound.
    """
    if lb_hint < 0 or ub_hint < 0:
        raise InvalidParameterError(f"hints must be >= 0, got lb={lb_hint}, ub={ub_hint}")
    if ub_hint and lb_hint > ub_hint:
        raise InvalidParameterError(f"inconsistent hints: lb {lb_hint} > ub {ub_hint}")
    if cg.order == 0:
        return ChromaticResult(lower=0, upper=0, exact=0)

    deadline = time.monotonic() + budget_ms / 1000.0 if budget_ms is not None else None
    clique = max_clique(cg, budget_ms)
    lower = max(lb_hint, clique.size)

    adj = [set(cg.neighbors(i)) for i in range(cg.order)]
    seed = min((dsatur_greedy(adj), list(greedy_coloring(cg).colors)), key=lambda c: max(c) + 1)
    if lower > max(seed) + 1:
        raise InvalidParameterError(f"lb_hint {lb_hint} exceeds a known {max(seed) + 1}-coloring")
    search = _DsaturSearch(adj, seed, lower, deadline)

    exhausted = False
    with live_metrics.timed("exact_chromatic"):
        try:
            search.backtrack(0, 0)
        except BudgetExhaustedError:
            exhausted = True
            live_metrics.on_budget_exhausted()
            logger.warning("Exact search hit its %s ms budget at %s nodes", budget_ms, search.nodes)

    best_num = search.best_num
    if not exhausted:
        if ub_hint and ub_hint < best_num:
            raise InvalidParameterError(f"ub_hint {ub_hint} is below the chromatic number {best_num}")
        lower = best_num
    upper = min(best_num, ub_hint) if ub_hint else best_num
    witness = None
    if best_num == upper:
        witness = finalize_assignment(cg.routing, search.best, Method.EXACT_SEARCH, {"nodes": search.nodes}, graph=cg)

    result = ChromaticResult(
        lower=lower,
        upper=upper,
        exact=upper if lower == upper else None,
        witness=witness,
        budget_exhausted=exhausted,
        nodes=search.nodes,
    )
    logger.info("Chromatic search on %s vertices: [%s, %s] after %s nodes", cg.order, lower, upper, search.nodes)
    return result
