from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, List, Tuple

from core.errors import InvalidParameterError, VerificationError

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class TotalColoring:
    """Colors for the vertices and edges of K_n, 0-based."""

    n: int
    vertex_color: Tuple[int, ...]
    edge_color: Dict[Pair, int] = field(default_factory=dict, compare=False)

    def edge(self, i: int, j: int) -> int:
        return self.edge_color[(i, j) if i < j else (j, i)]

    @property
    def num_colors(self) -> int:
        return len(set(self.vertex_color) | set(self.edge_color.values()))

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "colors_base": 0,
            "num_colors": self.num_colors,
            "vertex_color": list(self.vertex_color),
            "edge_color": [[i, j, c] for (i, j), c in sorted(self.edge_color.items())],
        }


def total_coloring_odd(n: int) -> TotalColoring:
    """Cyclic n-total-coloring of K_n: vertex i -> 2i, edge {i,j} -> i+j (mod n)."""
    if n < 1 or n % 2 == 0:
        raise InvalidParameterError(f"total_coloring_odd needs an odd n >= 1, got {n}")
    tc = TotalColoring(
        n=n,
        vertex_color=tuple(2 * i % n for i in range(n)),
        edge_color={(i, j): (i + j) % n for i, j in combinations(range(n), 2)},
    )
    if not validate_total_coloring(tc):
        raise VerificationError(f"cyclic total coloring of K_{n} failed validation")
    return tc


def validate_total_coloring(tc: TotalColoring) -> bool:
    n = tc.n
    if len(tc.vertex_color) != n:
        return False
    if any((i, j) not in tc.edge_color for i, j in combinations(range(n), 2)):
        return False
    if len(set(tc.vertex_color)) != n:
        return False
    for v in range(n):
        incident = [tc.edge(v, u) for u in range(n) if u != v]
        if len(set(incident)) != len(incident):
            return False
        if tc.vertex_color[v] in incident:
            return False
    return True


def min_total_colors_exhaustive(n: int) -> int:
    """Fewest colors in any total coloring of K_n, by brute force (n <= 3)."""
    if not 1 <= n <= 3:
        raise InvalidParameterError(f"exhaustive search is limited to 1 <= n <= 3, got {n}")
    pairs = list(combinations(range(n), 2))
    for k in range(1, 2 * n + 1):
        for colors in product(range(k), repeat=n + len(pairs)):
            tc = TotalColoring(n=n, vertex_color=tuple(colors[:n]), edge_color=dict(zip(pairs, colors[n:])))
            if validate_total_coloring(tc):
                logger.debug("K_%s admits a %s-total-coloring", n, k)
                return k
    raise VerificationError(f"no total coloring of K_{n} found")


def as_rows(tc: TotalColoring) -> List[dict]:
    rows = [{"element": f"v{i}", "color": c} for i, c in enumerate(tc.vertex_color)]
    rows.extend({"element": f"e{i}-{j}", "color": c} for (i, j), c in sorted(tc.edge_color.items()))
    return rows
