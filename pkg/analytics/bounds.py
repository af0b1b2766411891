from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from core.errors import InvalidParameterError
from core.tree import Tree

logger = logging.getLogger(__name__)


class CutKind(str, Enum):
    EDGE_CUT = "edge_cut"
    VERTEX_CUT = "vertex_cut"


@dataclass
class CutCertificate:
    """A lower bound on w (or π) witnessed by one cut."""

    kind: CutKind
    witness: Union[int, Tuple[int, ...]]
    crossing: int
    bound: int
    component_sizes: Tuple[int, ...] = field(default_factory=tuple)
    numerator: int = 0
    denominator: int = 1

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "witness": list(self.witness) if isinstance(self.witness, tuple) else self.witness,
            "crossing": self.crossing,
            "bound": self.bound,
            "components": list(self.component_sizes),
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _normalize_set(tree: Tree, S: Iterable[int]) -> Tuple[int, ...]:
    members = tuple(sorted(set(S)))
    for v in members:
        tree.check_vertex(v)
    return members


def _crossing(tree: Tree, members: Sequence[int]) -> int:
    inside = set(members)
    return sum(1 for e in tree.edges() if (e in inside) != (tree.parents[e] in inside))


def edge_cut_bound_tree(tree: Tree) -> CutCertificate:
    """Best single-edge cut: max a(n-a) over edges, lowest edge id on ties."""
    n = tree.n
    if n < 2:
        raise InvalidParameterError(f"{tree.tag} has no edges")
    sizes = tree.subtree_sizes
    best_edge, best = 1, -1
    for e in tree.edges():
        load = sizes[e] * (n - sizes[e])
        if load > best:
            best_edge, best = e, load
    a = sizes[best_edge]
    return CutCertificate(
        kind=CutKind.EDGE_CUT,
        witness=best_edge,
        crossing=1,
        bound=best,
        component_sizes=(a, n - a),
        numerator=best,
        denominator=1,
    )


def edge_cut_bound_at(graph: Tree, S: Iterable[int]) -> CutCertificate:
    members = _normalize_set(graph, S)
    if not members or len(members) == graph.n:
        raise InvalidParameterError("S must be a non-empty proper subset of the vertices")
    crossing = _crossing(graph, members)
    inside = len(members)
    numerator = inside * (graph.n - inside)
    return CutCertificate(
        kind=CutKind.EDGE_CUT,
        witness=members,
        crossing=crossing,
        bound=_ceil_div(numerator, crossing),
        component_sizes=(inside, graph.n - inside),
        numerator=numerator,
        denominator=crossing,
    )


def components_without(tree: Tree, members: Sequence[int]) -> List[int]:
    """Sizes of the components of tree - S, in order of their lowest vertex."""
    removed = set(members)
    seen = set(removed)
    sizes: List[int] = []
    for start in range(tree.n):
        if start in seen:
            continue
        seen.add(start)
        stack, size = [start], 0
        while stack:
            v = stack.pop()
            size += 1
            for w in tree.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        sizes.append(size)
    return sizes


def _pair_sum(sizes: Sequence[int]) -> int:
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


def vertex_cut_bound_at(tree: Tree, S: Iterable[int]) -> CutCertificate:
    """Unordered component pairs over floor(crossing / 2)."""
    members = _normalize_set(tree, S)
    if not members:
        raise InvalidParameterError("S must be non-empty")
    sizes = components_without(tree, members)
    if len(sizes) < 2:
        raise InvalidParameterError(f"S={list(members)} is not a vertex cut of {tree.tag}")
    crossing = _crossing(tree, members)
    pairs = crossing // 2
    if pairs == 0:
        raise InvalidParameterError(f"S={list(members)} has only {crossing} crossing edge")
    numerator = _pair_sum(sizes)
    return CutCertificate(
        kind=CutKind.VERTEX_CUT,
        witness=members,
        crossing=crossing,
        bound=_ceil_div(numerator, pairs),
        component_sizes=tuple(sizes),
        numerator=numerator,
        denominator=pairs,
    )


def _singleton_cut(tree: Tree, v: int) -> Optional[CutCertificate]:
    sizes = [tree.subtree_sizes[c] for c in tree.children(v)]
    if v != 0:
        sizes.insert(0, tree.n - tree.subtree_sizes[v])
    if len(sizes) < 2:
        return None
    crossing = tree.degree(v)
    numerator = _pair_sum(sizes)
    pairs = crossing // 2
    return CutCertificate(
        kind=CutKind.VERTEX_CUT,
        witness=(v,),
        crossing=crossing,
        bound=_ceil_div(numerator, pairs),
        component_sizes=tuple(sizes),
        numerator=numerator,
        denominator=pairs,
    )


def best_vertex_cut_bound(tree: Tree, max_cut_size: int = 1) -> CutCertificate:
    """Maximum vertex-cut bound over cut sets of size <= max_cut_size.

    Sets are scanned in lexicographic order and only a strictly larger bound
    replaces the incumbent, so the lowest witness wins ties.
    """
    if max_cut_size < 1:
        raise InvalidParameterError(f"max_cut_size must be >= 1, got {max_cut_size}")
    best: Optional[CutCertificate] = None
    for size in range(1, max_cut_size + 1):
        for members in combinations(range(tree.n), size):
            if size == 1:
                cert = _singleton_cut(tree, members[0])
            else:
                try:
                    cert = vertex_cut_bound_at(tree, members)
                except InvalidParameterError:
                    cert = None
            if cert is not None and (best is None or cert.bound > best.bound):
                best = cert
    if best is None:
        raise InvalidParameterError(f"{tree.tag} has no vertex cut of size <= {max_cut_size}")
    logger.debug("Best vertex cut of %s: %s at %s", tree.tag, best.bound, best.witness)
    return best


def forwarding_index_tree(tree: Tree) -> int:
    """π of a tree: the unique routing makes it the largest a(n-a)."""
    return edge_cut_bound_tree(tree).bound


def spider_load_profile(k: int, t: int) -> List[int]:
    """(kt+1-x)x for x = 1..t-1: loads of interior edges of a path component."""
    if k < 1 or t < 1:
        raise InvalidParameterError(f"k and t must be >= 1, got k={k}, t={t}")
    return [(k * t + 1 - x) * x for x in range(1, t)]


def is_strictly_increasing(values: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))
