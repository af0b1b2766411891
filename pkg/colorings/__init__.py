from colorings.base import Method, VerificationReport, WavelengthAssignment, verify_assignment
from colorings.binary import color_binary_tree
from colorings.dispatch import color_mary
from colorings.even_recursive import color_double_tree, color_even_mary
from colorings.greedy import GreedyOrder, greedy_coloring
from colorings.interval import color_path_tree
from colorings.odd_spider import color_odd_spider

__all__ = [
    "GreedyOrder",
    "Method",
    "VerificationReport",
    "WavelengthAssignment",
    "color_binary_tree",
    "color_double_tree",
    "color_even_mary",
    "color_mary",
    "color_odd_spider",
    "color_path_tree",
    "greedy_coloring",
    "verify_assignment",
]
