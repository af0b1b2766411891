from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Tuple

from colorings.base import Method, WavelengthAssignment, finalize_assignment
from core.errors import InvalidParameterError, VerificationError
from core.routing import all_pairs_routing
from core.tree import Address, build_complete_mary_tree, mary_addresses

logger = logging.getLogger(__name__)

AddressPair = Tuple[Address, Address]


def _key(a: Address) -> Tuple[int, Address]:
    # breadth-first vertex order of a complete tree
    return len(a), a


def _pair(a: Address, b: Address) -> AddressPair:
    return (a, b) if _key(a) < _key(b) else (b, a)


def _canonical_pairs(pairs: Iterable[AddressPair]) -> List[AddressPair]:
    return sorted((_pair(a, b) for a, b in pairs), key=lambda p: (_key(p[0]), _key(p[1])))


# 2-coloring of T_{2,1}
_TABLE_H1: Dict[int, List[AddressPair]] = {
    0: [((), (1,)), ((), (2,))],
    1: [((1,), (2,))],
}

# 12-coloring of T_{2,2}; the last row colors (r12, r22), which the printed
# table drops in favour of a repeat of (r11, r22).
_TABLE_H2: Dict[int, List[AddressPair]] = {
    0: [((), (1,)), ((), (2,))],
    1: [((), (1, 1)), ((), (2, 1))],
    2: [((), (1, 2)), ((), (2, 2))],
    3: [((1,), (2,)), ((1, 1), (1, 2)), ((2, 1), (2, 2))],
    4: [((1,), (2, 1)), ((1,), (1, 2)), ((2,), (2, 2))],
    5: [((1,), (2, 2)), ((1,), (1, 1)), ((2,), (2, 1))],
    6: [((1, 1), (2,))],
    7: [((1, 1), (2, 1))],
    8: [((1, 1), (2, 2))],
    9: [((1, 2), (2,))],
    10: [((1, 2), (2, 1))],
    11: [((1, 2), (2, 2))],
}


def _from_table(table: Dict[int, List[AddressPair]]) -> Dict[AddressPair, int]:
    return {_pair(a, b): c for c, pairs in table.items() for a, b in pairs}


def _subtree(prefix: Address, height: int) -> List[Address]:
    return mary_addresses(2, height, prefix)


@lru_cache(maxsize=None)
def _canonical(h: int) -> Tuple[Tuple[Tuple[AddressPair, int], ...], int, Tuple[Tuple[str, int], ...]]:
    """Color of every address pair of T_{2,h}, the color count and the step accounting."""
    if h == 1:
        coloring = _from_table(_TABLE_H1)
        return tuple(coloring.items()), 2, ()
    if h == 2:
        coloring = _from_table(_TABLE_H2)
        return tuple(coloring.items()), 12, ()

    s = 2 ** (h - 1) - 1
    r, r1, r2 = (), (1,), (2,)
    h11, h12 = _subtree((1, 1), h - 2), _subtree((1, 2), h - 2)
    h21, h22 = _subtree((2, 1), h - 2), _subtree((2, 2), h - 2)

    # Step 1: the paths through e_1, split into nine classes
    classes: List[List[AddressPair]] = [
        [(r, r1)],
        [(r1, r2)],
        _canonical_pairs((r, y) for y in h11 + h12),
        _canonical_pairs((r1, y) for y in h21 + h22),
        _canonical_pairs((r2, y) for y in h11 + h12),
        _canonical_pairs(product(h11, h21)),
        _canonical_pairs(product(h11, h22)),
        _canonical_pairs(product(h12, h21)),
        _canonical_pairs(product(h12, h22)),
    ]
    coloring: Dict[AddressPair, int] = {}
    blocks: List[List[int]] = []
    next_color = 0
    for members in classes:
        block = list(range(next_color, next_color + len(members)))
        for pair, c in zip(members, block):
            coloring[_pair(*pair)] = c
        blocks.append(block)
        next_color += len(members)
    step1 = next_color

    # Step 2: reuse each class's colors for edge-disjoint paths
    p1 = _canonical_pairs(product(h11, h12))
    p2 = _canonical_pairs(product(h21, h22))

    def assign(pairs: Iterable[AddressPair], block: List[int], offset: int = 0) -> None:
        for g, pair in enumerate(pairs):
            key = _pair(*pair)
            if key in coloring:
                raise VerificationError(f"T(2,{h}): pair {key} colored twice")
            coloring[key] = block[offset + g]

    assign([(r, r2), p1[0], p2[0]], [blocks[0][0]] * 3)
    assign([p1[1], p2[1]], [blocks[1][0]] * 2)
    assign(_canonical_pairs((r, y) for y in h21 + h22), blocks[2])
    assign(p1[2 : 2 + 2 * s], blocks[3])
    assign(p2[2 : 2 + 2 * s], blocks[4])

    inner, inner_colors, _ = _canonical(h - 2)
    hubs = [(r1, (1, 2)), (r2, (2, 1)), (r2, (2, 2)), (r1, (1, 1))]
    for block, (hub, prefix) in zip(blocks[5:], hubs):
        if len(block) < inner_colors + s:
            raise VerificationError(f"T(2,{h}): class of {len(block)} colors cannot host {prefix}")
        assign(((prefix + a, prefix + b) for (a, b), _ in inner), [block[c] for _, c in inner])
        assign(((hub, prefix + w) for w in _subtree((), h - 2)), block, inner_colors)

    # Step 3: leftover P1/P2 paths pair up on fresh colors
    left1, left2 = p1[2 + 2 * s :], p2[2 + 2 * s :]
    for a, b in zip(left1, left2):
        coloring[_pair(*a)] = coloring[_pair(*b)] = next_color
        next_color += 1
    step3 = next_color - step1

    accounting = (
        ("step1_colors", step1),
        ("step3_colors", step3),
        ("c6_slack", len(blocks[5]) - inner_colors - s),
    ) + tuple((f"class_{i + 1}", len(members)) for i, members in enumerate(classes))
    logger.debug("T(2,%s): step 1 used %s colors, step 3 added %s", h, step1, step3)
    return tuple(coloring.items()), next_color, accounting


def color_binary_tree(h: int) -> WavelengthAssignment:
    """Optimal coloring of T_{2,h}: base tables for h <= 2, the canonical recursion above."""
    if h < 1:
        raise InvalidParameterError(f"h must be >= 1, got {h}")
    tree = build_complete_mary_tree(2, h)
    routing = all_pairs_routing(tree)
    items, num_colors, accounting = _canonical(h)
    coloring = dict(items)
    if len(coloring) != len(routing):
        raise VerificationError(f"T(2,{h}): {len(coloring)} of {len(routing)} paths colored")

    colors = [coloring[_pair(tree.label(p.u), tree.label(p.v))] for p in routing]
    method = Method.TABLE_BASE if h <= 2 else Method.BINARY_CANONICAL
    wa = finalize_assignment(routing, colors, method, dict(accounting))
    if wa.num_colors != num_colors:
        raise VerificationError(f"T(2,{h}): expected {num_colors} colors, got {wa.num_colors}")
    logger.info("Colored T(2,%s): %s paths, %s colors", h, len(routing), wa.num_colors)
    return wa
