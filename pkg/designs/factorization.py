from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple

from core.errors import InvalidParameterError, VerificationError

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class EdgeColoring:
    m: int
    edge_color: Dict[Pair, int] = field(default_factory=dict, compare=False)

    def color(self, i: int, j: int) -> int:
        return self.edge_color[(i, j) if i < j else (j, i)]

    @property
    def num_colors(self) -> int:
        return len(set(self.edge_color.values()))

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "colors_base": 0,
            "num_colors": self.num_colors,
            "edge_color": [[i, j, c] for (i, j), c in sorted(self.edge_color.items())],
        }


def color_classes(ec: EdgeColoring) -> Dict[int, List[Pair]]:
    """Edges of each color, both lists in ascending order."""
    classes: Dict[int, List[Pair]] = defaultdict(list)
    for pair, c in sorted(ec.edge_color.items()):
        classes[c].append(pair)
    return dict(sorted(classes.items()))


def one_factorization(m: int) -> EdgeColoring:
    """Round-robin 1-factorization of K_m into m-1 perfect matchings."""
    if m < 2 or m % 2 == 1:
        raise InvalidParameterError(f"one_factorization needs an even m >= 2, got {m}")
    q = m - 1
    colors: Dict[Pair, int] = {}
    for i, j in combinations(range(m), 2):
        colors[(i, j)] = 2 * i % q if j == q else (i + j) % q
    ec = EdgeColoring(m=m, edge_color=colors)
    if not validate_edge_coloring(ec):
        raise VerificationError(f"round-robin factorization of K_{m} failed validation")
    return ec


def validate_edge_coloring(ec: EdgeColoring) -> bool:
    m = ec.m
    if any((i, j) not in ec.edge_color for i, j in combinations(range(m), 2)):
        return False
    for v in range(m):
        incident = [ec.color(v, u) for u in range(m) if u != v]
        if len(set(incident)) != len(incident):
            return False
    # proper + every color meets every vertex = perfect matchings
    for pairs in color_classes(ec).values():
        if 2 * len(pairs) != m:
            return False
    return True


def as_rows(ec: EdgeColoring) -> List[dict]:
    return [
        {"color": c, "matching": " ".join(f"{i}-{j}" for i, j in pairs)}
        for c, pairs in color_classes(ec).items()
    ]
