from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, List, Tuple

from colorings.base import Method, WavelengthAssignment, finalize_assignment
from core.errors import InvalidParameterError
from core.routing import all_pairs_routing
from core.tree import Tree
from designs.total import total_coloring_odd

logger = logging.getLogger(__name__)


def spider_components(tree: Tree) -> List[int]:
    """Component index of every non-root vertex (root maps to -1)."""
    component = [-1] * tree.n
    for i, head in enumerate(tree.children(0)):
        for v in tree.subtree_vertices(head):
            component[v] = i
    return component


def color_odd_spider(tree: Tree) -> WavelengthAssignment:
    """kt^2 colors for a root of odd degree k with k components of t vertices.

    Colors split into k sets of t^2 indexed by an n-total-coloring f of K_k:
    paths inside component i (root included) draw from set f(v_i), paths
    between components i and j draw from set f(e_ij).
    """
    heads = tree.children(0)
    k = len(heads)
    if k < 3 or k % 2 == 0:
        raise InvalidParameterError(f"root degree must be odd and >= 3, got {k}")
    sizes = {tree.subtree_sizes[v] for v in heads}
    if len(sizes) != 1:
        raise InvalidParameterError(f"components have unequal sizes {sorted(sizes)}")
    t = sizes.pop()

    f = total_coloring_odd(k)
    component = spider_components(tree)
    routing = all_pairs_routing(tree)

    block = t * t
    used: Counter = Counter()
    colors: List[int] = []
    for path in routing:
        i, j = component[path.u], component[path.v]
        if i == -1 or i == j:
            family: Tuple[int, ...] = (j,)
            color_set = f.vertex_color[j]
        else:
            family = (min(i, j), max(i, j))
            color_set = f.edge(i, j)
        colors.append(color_set * block + used[family])
        used[family] += 1

    family_sizes: Dict[str, int] = {"-".join(map(str, fam)): n for fam, n in sorted(used.items())}
    meta = {
        "k": k,
        "t": t,
        "within_family_size": t * (t + 1) // 2,
        "cross_family_size": block,
        "family_sizes": family_sizes,
    }
    wa = finalize_assignment(routing, colors, Method.ODD_TOTAL, meta)
    logger.info("Colored %s as a %s-spider: %s paths, %s colors", tree.tag, k, len(routing), wa.num_colors)
    return wa
