from __future__ import annotations

import logging
from typing import List, Set

from colorings.base import Method, WavelengthAssignment, finalize_assignment
from core.errors import InvalidParameterError
from core.routing import all_pairs_routing
from core.tree import build_complete_mary_tree

logger = logging.getLogger(__name__)


def color_path_tree(h: int) -> WavelengthAssignment:
    """First-fit coloring of T_{1,h} in left-endpoint order.

    On a path every route is an interval of edges, so first-fit by left
    endpoint meets the maximum load.
    """
    if h < 1:
        raise InvalidParameterError(f"h must be >= 1, got {h}")
    tree = build_complete_mary_tree(1, h)
    routing = all_pairs_routing(tree)

    used: List[Set[int]] = [set() for _ in range(tree.n)]
    colors: List[int] = []
    for path in routing:
        taken = set().union(*(used[e] for e in path.edges))
        c = 0
        while c in taken:
            c += 1
        for e in path.edges:
            used[e].add(c)
        colors.append(c)

    wa = finalize_assignment(routing, colors, Method.INTERVAL)
    logger.info("Colored T(1,%s): %s paths, %s colors", h, len(routing), wa.num_colors)
    return wa
