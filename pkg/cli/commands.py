from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

import pandas as pd
from joblib import Parallel, delayed

from analytics.bounds import (
    best_vertex_cut_bound,
    edge_cut_bound_tree,
    forwarding_index_tree,
    is_strictly_increasing,
    spider_load_profile,
)
from analytics.ratios import closed_form_pi_spider, closed_form_w
from cli.run_config import ColorMethod, DesignKind, Family, RunConfig, Subcommand
from colorings.base import WavelengthAssignment, verify_assignment
from colorings.dispatch import color_mary
from colorings.even_recursive import color_double_tree
from colorings.greedy import greedy_coloring
from colorings.odd_spider import color_odd_spider
from core import live_metrics
from core.errors import InvalidParameterError
from core.routing import all_pairs_routing, conflict_graph
from core.serialization import conflict_graph_from_dict, conflict_graph_to_dict, tree_to_dict, tree_to_dot
from core.tree import Tree, build_complete_mary_tree, build_double_tree, build_spider
from core.utils import parse_int_range
from designs import factorization, total
from exact.certificate import certify
from exact.chromatic import exact_chromatic
from exact.clique import max_clique

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_BAD_PARAMETERS = 2
EXIT_VERIFICATION = 3
EXIT_INCONCLUSIVE = 4


@dataclass
class CommandOutput:
    data: Any
    text: str
    frame: Optional[pd.DataFrame] = None
    dot: Optional[str] = None
    exit_code: int = 0


def build_tree(cfg: RunConfig) -> Tree:
    if cfg.family is Family.MARY:
        return build_complete_mary_tree(cfg.m, cfg.h)
    if cfg.family is Family.SPIDER:
        return build_spider(cfg.k, cfg.t, cfg.shape)
    return build_double_tree(cfg.m, cfg.h)


def _num_paths(tree: Tree) -> int:
    return tree.n * (tree.n - 1) // 2


def cmd_build(cfg: RunConfig) -> CommandOutput:
    tree = build_tree(cfg)
    if cfg.conflict_graph:
        if _num_paths(tree) > cfg.max_paths_greedy:
            raise InvalidParameterError(f"{tree.tag} has {_num_paths(tree)} paths, above {cfg.max_paths_greedy}")
        cg = conflict_graph(all_pairs_routing(tree, allow_empty=True))
        return CommandOutput(
            data=conflict_graph_to_dict(cg),
            text=f"{tree.tag}: conflict graph with {cg.order} paths, {cg.edge_count} conflicts",
        )
    logger.info("Built %s: n=%s", tree.tag, tree.n)
    return CommandOutput(
        data=tree_to_dict(tree),
        text=f"{tree.tag}: n={tree.n}, {tree.n - 1} edges",
        dot=tree_to_dot(tree),
    )


def _construct(cfg: RunConfig, tree: Tree) -> WavelengthAssignment:
    if cfg.family is Family.MARY:
        return color_mary(cfg.m, cfg.h)
    if cfg.family is Family.SPIDER:
        return color_odd_spider(tree)
    return color_double_tree(cfg.m, cfg.h)


def cmd_color(cfg: RunConfig) -> CommandOutput:
    tree = build_tree(cfg)
    paths = _num_paths(tree)
    if cfg.method is ColorMethod.CONSTRUCT:
        if paths > cfg.max_paths:
            raise InvalidParameterError(f"{tree.tag} has {paths} paths, above the cap of {cfg.max_paths}")
        wa = _construct(cfg, tree)
    else:
        if paths > cfg.max_paths_greedy:
            raise InvalidParameterError(f"{tree.tag} has {paths} paths, above the greedy cap {cfg.max_paths_greedy}")
        wa = greedy_coloring(conflict_graph(all_pairs_routing(tree)), cfg.order)

    data = wa.as_dict()
    text = f"{wa.num_colors} colors"
    exit_code = EXIT_OK
    if cfg.verify:
        report = verify_assignment(wa.routing, wa)
        data["verification"] = report.as_dict()
        text += ", proper" if report.proper else f", improper ({len(report.violations)} violations)"
        exit_code = EXIT_OK if report.proper else EXIT_VERIFICATION
    return CommandOutput(data=data, text=text, frame=wa.as_frame(), exit_code=exit_code)


def cmd_bounds(cfg: RunConfig) -> CommandOutput:
    tree = build_tree(cfg)
    edge = edge_cut_bound_tree(tree)
    try:
        vertex = best_vertex_cut_bound(tree)
    except InvalidParameterError:
        vertex = None
    pi = forwarding_index_tree(tree)

    data: Dict[str, Any] = {
        "instance": tree.tag,
        "edge_cut": edge.as_dict(),
        "vertex_cut": vertex.as_dict() if vertex is not None else None,
        "pi": pi,
    }
    if cfg.family is Family.SPIDER and cfg.k >= 2:
        profile = spider_load_profile(cfg.k, cfg.t)
        data["pi_closed_form"] = closed_form_pi_spider(cfg.k, cfg.t)
        data["load_profile_increasing"] = is_strictly_increasing(profile)

    parts = [f"edge_cut {edge.bound}"]
    if vertex is not None:
        parts.append(f"vertex_cut {vertex.bound}")
    parts.append(f"pi {pi}")
    return CommandOutput(data=data, text=f"{tree.tag}: " + ", ".join(parts))


def cmd_designs(cfg: RunConfig) -> CommandOutput:
    if cfg.kind is DesignKind.TOTAL:
        tc = total.total_coloring_odd(cfg.n)
        frame = pd.DataFrame(total.as_rows(tc))
        head = f"total coloring of K_{cfg.n}: {tc.num_colors} colors, 0-based"
        data = tc.as_dict()
    else:
        ec = factorization.one_factorization(cfg.n)
        frame = pd.DataFrame(factorization.as_rows(ec))
        head = f"1-factorization of K_{cfg.n}: {ec.num_colors} perfect matchings, 0-based"
        data = ec.as_dict()
    return CommandOutput(data=data, text=head + "\n" + frame.to_string(index=False), frame=frame)


def cmd_certify(cfg: RunConfig) -> CommandOutput:
    cert = certify(
        cfg.m,
        cfg.h,
        cfg.budget_ms,
        max_paths=cfg.max_paths,
        max_exact_vertices=cfg.max_exact_vertices,
    )
    code = EXIT_OK if cert.optimal else EXIT_INCONCLUSIVE
    return CommandOutput(data=cert.as_dict(), text=cert.summary(), exit_code=code)


def table_row(m: int, h: int, max_paths: int) -> Dict[str, Any]:
    """One (m, h) line: closed form, construction, bounds and the exact w/pi ratio."""
    tree = build_complete_mary_tree(m, h)
    paths = _num_paths(tree)
    w = closed_form_w(m, h)
    pi = forwarding_index_tree(tree)
    try:
        vertex_cut: Optional[int] = best_vertex_cut_bound(tree).bound
    except InvalidParameterError:
        vertex_cut = None

    if paths > max_paths:
        constructive: Any = "skipped"
        proper: Any = "skipped"
    else:
        wa = color_mary(m, h)
        constructive, proper = wa.num_colors, wa.proper

    logger.info("Table row (%s,%s) done", m, h)
    return {
        "m": m,
        "h": h,
        "n": tree.n,
        "paths": paths,
        "w": w,
        "constructive": constructive,
        "proper": proper,
        "edge_cut": edge_cut_bound_tree(tree).bound,
        "vertex_cut": vertex_cut,
        "pi": pi,
        "ratio": str(Fraction(w, pi)),
    }


def cmd_table(cfg: RunConfig) -> CommandOutput:
    grid = [(m, h) for m in parse_int_range(cfg.m_range) for h in parse_int_range(cfg.h_range)]
    rows = Parallel(n_jobs=cfg.n_jobs)(delayed(table_row)(m, h, cfg.max_paths) for m, h in grid)
    frame = pd.DataFrame(rows)
    return CommandOutput(data=rows, text=frame.to_string(index=False), frame=frame)


def cmd_oracle(cfg: RunConfig) -> CommandOutput:
    raw = cfg.input.read_text(encoding="utf-8") if cfg.input is not None else sys.stdin.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"conflict graph is not valid JSON: {exc}") from exc
    cg = conflict_graph_from_dict(doc.get("data", doc))
    if cg.order > cfg.max_exact_vertices:
        raise InvalidParameterError(f"{cg.order} vertices exceed the exact-search cap of {cfg.max_exact_vertices}")

    clique = max_clique(cg, cfg.budget_ms)
    result = exact_chromatic(cg, lb_hint=clique.size, budget_ms=cfg.budget_ms)
    data = {"order": cg.order, "conflicts": cg.edge_count, "clique": clique.as_dict(), "chromatic": result.as_dict()}
    if result.exact is not None:
        return CommandOutput(data=data, text=f"chromatic number {result.exact}")
    return CommandOutput(
        data=data,
        text=f"chromatic number in [{result.lower}, {result.upper}], inconclusive",
        exit_code=EXIT_INCONCLUSIVE,
    )


COMMANDS: Dict[Subcommand, Callable[[RunConfig], CommandOutput]] = {
    Subcommand.BUILD: cmd_build,
    Subcommand.COLOR: cmd_color,
    Subcommand.BOUNDS: cmd_bounds,
    Subcommand.DESIGNS: cmd_designs,
    Subcommand.CERTIFY: cmd_certify,
    Subcommand.TABLE: cmd_table,
    Subcommand.ORACLE: cmd_oracle,
}


def run_command(cfg: RunConfig) -> CommandOutput:
    with live_metrics.timed(cfg.subcommand.value):
        return COMMANDS[cfg.subcommand](cfg)
