from __future__ import annotations

import logging
from enum import Enum
from typing import List

from colorings.base import Method, WavelengthAssignment, finalize_assignment
from core.routing import ConflictGraph

logger = logging.getLogger(__name__)


class GreedyOrder(str, Enum):
    CANONICAL = "canonical"
    DEGREE_DESC = "degree_desc"


def greedy_order(cg: ConflictGraph, order: GreedyOrder | str) -> List[int]:
    order = GreedyOrder(order)
    if order is GreedyOrder.CANONICAL:
        return list(range(cg.order))
    return sorted(range(cg.order), key=lambda i: (-cg.degree(i), i))


def greedy_coloring(cg: ConflictGraph, order: GreedyOrder | str = GreedyOrder.CANONICAL) -> WavelengthAssignment:
    """First-fit coloring in the given vertex order."""
    colors = [-1] * cg.order
    for i in greedy_order(cg, order):
        taken = {colors[j] for j in cg.neighbors(i) if colors[j] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[i] = c

    wa = finalize_assignment(cg.routing, colors, Method.GREEDY, {"order": GreedyOrder(order).value}, graph=cg)
    logger.info("Greedy (%s) used %s colors on %s paths", GreedyOrder(order).value, wa.num_colors, cg.order)
    return wa
