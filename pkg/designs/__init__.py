from designs.factorization import EdgeColoring, one_factorization, validate_edge_coloring
from designs.total import TotalColoring, total_coloring_odd, validate_total_coloring

__all__ = [
    "EdgeColoring",
    "TotalColoring",
    "one_factorization",
    "total_coloring_odd",
    "validate_edge_coloring",
    "validate_total_coloring",
]
