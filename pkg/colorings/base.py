from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
import pandas as pd

from core import live_metrics
from core.errors import InvalidParameterError, VerificationError
from core.routing import ConflictGraph, Routing

logger = logging.getLogger(__name__)


class Method(str, Enum):
    INTERVAL = "interval"
    BINARY_CANONICAL = "binary_canonical"
    ODD_TOTAL = "odd_total"
    EVEN_RECURSIVE = "even_recursive"
    DOUBLE_TREE = "double_tree"
    GREEDY = "greedy"
    EXACT_SEARCH = "exact_search"
    TABLE_BASE = "table_base"


@dataclass
class WavelengthAssignment:
    """Colors indexed like the routing's paths, contiguous from 0."""

    colors: Tuple[int, ...]
    num_colors: int
    method: Method
    routing: Optional[Routing] = field(default=None, repr=False, compare=False)
    meta: Dict[str, Any] = field(default_factory=dict, compare=False)
    proper: Optional[bool] = None

    def __len__(self) -> int:
        return len(self.colors)

    def color_of(self, u: int, v: int) -> int:
        if self.routing is None:
            raise InvalidParameterError("assignment is not attached to a routing")
        return self.colors[self.routing.index_of(u, v)]

    def as_dict(self) -> dict:
        tree = self.routing.tree if self.routing is not None else None
        params = dict(tree.params) if tree is not None else {}
        paths = (
            [{"u": p.u, "v": p.v, "color": c} for p, c in zip(self.routing.paths, self.colors)]
            if self.routing is not None
            else [{"index": i, "color": c} for i, c in enumerate(self.colors)]
        )
        return {
            "family": tree.family if tree is not None else None,
            "m": params.get("m"),
            "h": params.get("h"),
            "params": params,
            "num_colors": self.num_colors,
            "method": self.method.value,
            "proper": self.proper,
            "paths": paths,
        }

    def as_frame(self) -> pd.DataFrame:
        if self.routing is None:
            return pd.DataFrame({"index": range(len(self.colors)), "color": list(self.colors)})
        return pd.DataFrame(
            {
                "u": [p.u for p in self.routing.paths],
                "v": [p.v for p in self.routing.paths],
                "color": list(self.colors),
            }
        )


@dataclass
class VerificationReport:
    proper: bool
    violations: List[Tuple[int, int]]
    num_colors: int

    def as_dict(self) -> dict:
        return {"proper": self.proper, "violations": [list(v) for v in self.violations], "num_colors": self.num_colors}


def verify_assignment(routing: Routing, wa: WavelengthAssignment) -> VerificationReport:
    """Check every edge bucket for two paths sharing a color.

    Violations are path-index pairs (i < j), each reported once.
    """
    if len(wa.colors) != len(routing):
        raise InvalidParameterError(f"assignment covers {len(wa.colors)} paths, routing has {len(routing)}")
    colors = np.asarray(wa.colors, dtype=np.int64)
    violations: Set[Tuple[int, int]] = set()
    for bucket in routing.edge_buckets.values():
        if bucket.size < 2:
            continue
        bucket_colors = colors[bucket]
        if np.unique(bucket_colors).size == bucket.size:
            continue
        by_color: Dict[int, List[int]] = defaultdict(list)
        for i, c in zip(bucket.tolist(), bucket_colors.tolist()):
            by_color[c].append(i)
        for members in by_color.values():
            violations.update(combinations(sorted(members), 2))

    report = VerificationReport(
        proper=not violations,
        violations=sorted(violations),
        num_colors=int(np.unique(colors).size),
    )
    live_metrics.on_violations(len(report.violations))
    return report


def graph_violations(cg: ConflictGraph, colors: Sequence[int]) -> List[Tuple[int, int]]:
    return [(i, j) for i, j in cg.edges() if colors[i] == colors[j]]


def finalize_assignment(
    routing: Optional[Routing],
    colors: Sequence[int],
    method: Method,
    meta: Optional[Dict[str, Any]] = None,
    *,
    graph: Optional[ConflictGraph] = None,
) -> WavelengthAssignment:
    """Wrap raw colors, then refuse to return anything improper or gappy."""
    colors = tuple(int(c) for c in colors)
    num_colors = max(colors) + 1 if colors else 0
    if len(set(colors)) != num_colors:
        raise VerificationError(f"{method.value}: colors are not contiguous from 0", [])

    wa = WavelengthAssignment(
        colors=colors, num_colors=num_colors, method=method, routing=routing, meta=dict(meta or {})
    )
    if routing is not None:
        violations = verify_assignment(routing, wa).violations
    elif graph is not None:
        violations = graph_violations(graph, colors)
        live_metrics.on_violations(len(violations))
    else:
        raise InvalidParameterError("finalize_assignment needs a routing or a conflict graph")
    if violations:
        logger.error("%s produced %s conflicting pairs", method.value, len(violations))
        raise VerificationError(f"{method.value} assignment is improper", violations)

    wa.proper = True
    live_metrics.on_coloring(method.value)
    logger.debug("%s: %s paths, %s colors", method.value, len(colors), num_colors)
    return wa
