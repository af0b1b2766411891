from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from colorings.base import Method, WavelengthAssignment, finalize_assignment
from core.errors import InvalidParameterError, VerificationError
from core.routing import all_pairs_routing
from core.tree import Address, build_complete_mary_tree, build_double_tree, geometric_count, mary_addresses
from designs.factorization import one_factorization

logger = logging.getLogger(__name__)

Group = Tuple[str, ...]
Cell = Tuple[int, int]


def _require_even_m(m: int, h: int) -> None:
    if m < 4 or m % 2 == 1:
        raise InvalidParameterError(f"m must be even and >= 4, got {m}")
    if h < 1:
        raise InvalidParameterError(f"h must be >= 1, got {h}")


def side_groups(m: int) -> List[Tuple[Group, Tuple[int, ...]]]:
    """Same-side groups with their supports: subtree pairs first, then single subtrees."""
    groups: List[Tuple[Group, Tuple[int, ...]]] = [
        (("pair", str(i), str(j)), (i, j)) for i, j in combinations(range(m), 2)
    ]
    groups.extend((("internal", str(i)), (i,)) for i in range(m))
    return groups


def _greedy_cells(groups: List[Tuple[Group, Tuple[int, ...]]], m: int) -> Optional[Dict[Group, Cell]]:
    """Valid row with the most free columns, then its lowest free column; None when stuck."""
    free: List[List[int]] = [list(range(m)) for _ in range(m)]
    cells: Dict[Group, Cell] = {}
    for group, support in groups:
        rows = [r for r in range(m) if r not in support and free[r]]
        if not rows:
            return None
        row = max(rows, key=lambda r: (len(free[r]), -r))
        cells[group] = (row, free[row].pop(0))
    return cells


def _matched_cells(groups: List[Tuple[Group, Tuple[int, ...]]], m: int) -> Dict[Group, Cell]:
    cost = np.ones((len(groups), m * m))
    for g, (_, support) in enumerate(groups):
        for r in range(m):
            if r not in support:
                cost[g, r * m : (r + 1) * m] = 0.0
    rows_idx, cols_idx = linear_sum_assignment(cost)
    if cost[rows_idx, cols_idx].sum() > 0:
        raise VerificationError(f"no valid cell allocation exists for m={m}")
    return {groups[g][0]: divmod(int(c), m) for g, c in zip(rows_idx, cols_idx)}


def allocate_cells(m: int) -> Tuple[Dict[Group, Cell], bool]:
    """One block cell (row, column) per group, the row avoiding the group's support.

    Greedy placement first; if it gets stuck, a min-cost bipartite matching
    takes over. Returns the allocation and whether the matching was needed.
    """
    groups = side_groups(m)
    cells = _greedy_cells(groups, m)
    if cells is not None:
        return cells, False
    logger.warning("Greedy cell allocation failed for m=%s; falling back to bipartite matching", m)
    return _matched_cells(groups, m), True


def _pair_rank(p: int, q: int, size: int) -> int:
    return p * (2 * size - p - 1) // 2 + (q - p - 1)


class DoubleTreeScheme:
    """Colors for D_{m,h} addressed by side-tagged labels (1, *w) / (2, *w).

    Cross paths A_i-B_j fill block cell (i, j) of size t_{h-1}^2. Same-side
    groups reuse the cells chosen by ``allocate_cells`` (mirrored over columns
    for the B side). Paths ending at a or b use the 2 t_h - 1 colors after the
    blocks.
    """

    def __init__(self, m: int, h: int) -> None:
        _require_even_m(m, h)
        self.m, self.h = m, h
        self.block = geometric_count(m, h - 1) ** 2
        self.sub_size = geometric_count(m, h - 1)
        self._sub_pos = {w: i for i, w in enumerate(mary_addresses(m, h - 2))} if h >= 2 else {}
        self._hub_pos = {w: i for i, w in enumerate(mary_addresses(m, h - 1)[1:])}
        self.a_cells, fallback_a = allocate_cells(m)
        self.b_cells = {g: (c, r) for g, (r, c) in self.a_cells.items()}
        self.used_fallback = fallback_a
        self.hub_base = m * m * self.block

    @property
    def num_colors(self) -> int:
        return self.hub_base + 2 * len(self._hub_pos) + 1

    def _cell_color(self, cell: Cell, pos: int) -> int:
        return (cell[0] * self.m + cell[1]) * self.block + pos

    def color(self, x: Address, y: Address) -> int:
        wx, wy = x[1:], y[1:]
        if not wx and not wy:
            return self.hub_base
        if not wx or not wy:
            hub, other = (x, wy) if not wx else (y, wx)
            offset = 1 if hub[0] == 1 else 1 + len(self._hub_pos)
            return self.hub_base + offset + self._hub_pos[other]

        if x[0] == 2 and y[0] == 1:
            x, y, wx, wy = y, x, wy, wx
        i, j = wx[0] - 1, wy[0] - 1
        px, py = self._sub_pos[wx[1:]], self._sub_pos[wy[1:]]
        if x[0] != y[0]:
            return self._cell_color((i, j), px * self.sub_size + py)

        cells = self.a_cells if x[0] == 1 else self.b_cells
        if i == j:
            p, q = min(px, py), max(px, py)
            return self._cell_color(cells[("internal", str(i))], _pair_rank(p, q, self.sub_size))
        if i > j:
            i, j, px, py = j, i, py, px
        return self._cell_color(cells[("pair", str(i), str(j))], px * self.sub_size + py)

    def cell_map(self) -> dict:
        def rows(cells: Dict[Group, Cell]) -> List[dict]:
            return [{"group": "-".join(g), "cell": list(c)} for g, c in cells.items()]

        return {"a_cells": rows(self.a_cells), "b_cells": rows(self.b_cells), "fallback": self.used_fallback}


def color_double_tree(m: int, h: int) -> WavelengthAssignment:
    scheme = DoubleTreeScheme(m, h)
    tree = build_double_tree(m, h)
    routing = all_pairs_routing(tree)
    colors = [scheme.color(tree.label(p.u), tree.label(p.v)) for p in routing]
    wa = finalize_assignment(routing, colors, Method.DOUBLE_TREE, scheme.cell_map())
    if wa.num_colors != scheme.num_colors:
        raise VerificationError(f"D({m},{h}): expected {scheme.num_colors} colors, got {wa.num_colors}")
    logger.info("Colored D(%s,%s): %s paths, %s colors", m, h, len(routing), wa.num_colors)
    return wa


def color_even_mary(m: int, h: int) -> WavelengthAssignment:
    """m^h t_h colors for T_{m,h}, m even.

    Edge-color classes of a 1-factorization of K_m pair up the root's
    subtrees. Pairs of class 0 take a double-tree coloring of H_p + H_q, the
    other classes fill their own t_h^2 block, and root paths share t_h colors
    across subtrees by local address.
    """
    _require_even_m(m, h)
    tree = build_complete_mary_tree(m, h)
    routing = all_pairs_routing(tree)
    f = one_factorization(m)

    if h == 1:
        colors = [m - 1 if p.u == 0 else f.color(p.u - 1, p.v - 1) for p in routing]
        wa = finalize_assignment(routing, colors, Method.EVEN_RECURSIVE, {"factorization_classes": m - 1})
        logger.info("Colored T(%s,1): %s paths, %s colors", m, len(routing), wa.num_colors)
        return wa

    scheme = DoubleTreeScheme(m, h)
    size = geometric_count(m, h)
    block = size * size
    local = {w: i for i, w in enumerate(mary_addresses(m, h - 1))}
    partner: Dict[int, int] = {}
    for (p, q), c in f.edge_color.items():
        if c == 0:
            partner[p], partner[q] = q, p

    def to_double(w: Address, low: int) -> Address:
        return (1 if w[0] - 1 == low else 2,) + w[1:]

    colors: List[int] = []
    for path in routing:
        x, y = tree.label(path.u), tree.label(path.v)
        if not x:
            colors.append((m - 1) * block + local[y[1:]])
            continue
        p, q = x[0] - 1, y[0] - 1
        cls = 0 if p == q else f.color(p, q)
        if cls == 0:
            low = min(p, partner[p])
            colors.append(scheme.color(to_double(x, low), to_double(y, low)))
            continue
        if p > q:
            x, y = y, x
        colors.append(cls * block + local[x[1:]] * size + local[y[1:]])

    meta = {"double_tree": scheme.cell_map(), "factorization_classes": m - 1, "block_size": block}
    wa = finalize_assignment(routing, colors, Method.EVEN_RECURSIVE, meta)
    logger.info("Colored T(%s,%s): %s paths, %s colors", m, h, len(routing), wa.num_colors)
    return wa
