from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from analytics.bounds import best_vertex_cut_bound, edge_cut_bound_tree
from colorings.dispatch import color_mary
from core import live_metrics
from core.config import TreewaveSettings, load_settings
from core.errors import InvalidParameterError
from core.routing import all_pairs_routing, conflict_graph
from core.tree import build_complete_mary_tree
from exact.chromatic import exact_chromatic

logger = logging.getLogger(__name__)


class BoundSource(str, Enum):
    EDGE_CUT = "edge_cut"
    VERTEX_CUT = "vertex_cut"
    CLIQUE = "clique"
    EXACT_SEARCH = "exact_search"


@dataclass
class OptimalityCertificate:
    """Lower bound against constructive count for one T_{m,h}."""

    m: int
    h: int
    lower: int
    source: BoundSource
    constructive: Optional[int]
    optimal: bool
    exact: Optional[int] = None
    budget_exhausted: bool = False

    @property
    def instance(self) -> str:
        return f"mary({self.m},{self.h})"

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "h": self.h,
            "instance": self.instance,
            "lower": self.lower,
            "source": self.source.value,
            "constructive": self.constructive,
            "optimal": self.optimal,
            "exact": self.exact,
        }

    def summary(self) -> str:
        head = f"T({self.m},{self.h}): lower {self.lower} ({self.source.value})"
        if self.constructive is None:
            return f"{head}, constructive skipped, inconclusive"
        if self.optimal:
            return f"{head} = constructive {self.constructive}, optimal"
        tail = ", budget exhausted" if self.budget_exhausted else ""
        return f"{head} < constructive {self.constructive}, inconclusive{tail}"


def certify(
    m: int,
    h: int,
    budget_ms: Optional[int] = None,
    *,
    max_paths: Optional[int] = None,
    max_exact_vertices: Optional[int] = None,
    settings: Optional[TreewaveSettings] = None,
) -> OptimalityCertificate:
    """Match the best cut bound (or an exact search) against ``color_mary``."""
    if m < 1 or h < 1:
        raise InvalidParameterError(f"certify needs m >= 1 and h >= 1, got m={m}, h={h}")
    settings = settings or load_settings()
    budget_ms = settings.budget_ms if budget_ms is None else budget_ms
    max_paths = settings.max_paths_constructive if max_paths is None else max_paths
    max_exact_vertices = settings.max_exact_vertices if max_exact_vertices is None else max_exact_vertices

    with live_metrics.timed("certify"):
        tree = build_complete_mary_tree(m, h)
        edge = edge_cut_bound_tree(tree)
        lower, source = edge.bound, BoundSource.EDGE_CUT
        try:
            vertex = best_vertex_cut_bound(tree)
            if vertex.bound > lower:
                lower, source = vertex.bound, BoundSource.VERTEX_CUT
        except InvalidParameterError:
            logger.debug("%s has no cut vertex", tree.tag)

        num_paths = tree.n * (tree.n - 1) // 2
        if num_paths > max_paths:
            logger.warning("%s has %s paths, above the cap %s, construction skipped", tree.tag, num_paths, max_paths)
            return OptimalityCertificate(m=m, h=h, lower=lower, source=source, constructive=None, optimal=False)

        constructive = color_mary(m, h).num_colors
        exact: Optional[int] = None
        exhausted = False
        if lower < constructive and num_paths <= max_exact_vertices:
            cg = conflict_graph(all_pairs_routing(tree))
            result = exact_chromatic(cg, lb_hint=lower, ub_hint=constructive, budget_ms=budget_ms)
            exhausted = result.budget_exhausted
            if result.lower > lower:
                lower, source = result.lower, BoundSource.EXACT_SEARCH
            exact = result.exact

    cert = OptimalityCertificate(
        m=m,
        h=h,
        lower=lower,
        source=source,
        constructive=constructive,
        optimal=lower == constructive,
        exact=exact,
        budget_exhausted=exhausted,
    )
    logger.info("%s", cert.summary())
    return cert
