from analytics.bounds import (
    CutCertificate,
    CutKind,
    best_vertex_cut_bound,
    edge_cut_bound_at,
    edge_cut_bound_tree,
    forwarding_index_tree,
    spider_load_profile,
    vertex_cut_bound_at,
)
from analytics.ratios import (
    FamilyKind,
    FeasibleDelta,
    closed_form_pi_mary,
    closed_form_pi_spider,
    closed_form_w,
    feasible_delta_family,
    ratio_w_over_pi_spider,
)

__all__ = [
    "CutCertificate",
    "CutKind",
    "FamilyKind",
    "FeasibleDelta",
    "best_vertex_cut_bound",
    "closed_form_pi_mary",
    "closed_form_pi_spider",
    "closed_form_w",
    "edge_cut_bound_at",
    "edge_cut_bound_tree",
    "feasible_delta_family",
    "forwarding_index_tree",
    "ratio_w_over_pi_spider",
    "spider_load_profile",
    "vertex_cut_bound_at",
]
