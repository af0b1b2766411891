from __future__ import annotations

import logging

from analytics.ratios import closed_form_w
from colorings.base import Method, WavelengthAssignment
from colorings.binary import color_binary_tree
from colorings.even_recursive import color_even_mary
from colorings.interval import color_path_tree
from colorings.odd_spider import color_odd_spider
from core import live_metrics
from core.errors import InvalidParameterError, VerificationError
from core.routing import all_pairs_routing
from core.tree import build_complete_mary_tree

logger = logging.getLogger(__name__)


def color_mary(m: int, h: int) -> WavelengthAssignment:
    """Optimal wavelength assignment for T_{m,h}, one construction per case of m."""
    if m < 1 or h < 0:
        raise InvalidParameterError(f"need m >= 1 and h >= 0, got m={m}, h={h}")

    with live_metrics.timed("color"):
        if h == 0:
            routing = all_pairs_routing(build_complete_mary_tree(m, 0), allow_empty=True)
            return WavelengthAssignment(colors=(), num_colors=0, method=Method.TABLE_BASE, routing=routing, proper=True)
        if m == 1:
            wa = color_path_tree(h)
        elif m == 2:
            wa = color_binary_tree(h)
        elif m % 2 == 1:
            wa = color_odd_spider(build_complete_mary_tree(m, h))
        else:
            wa = color_even_mary(m, h)

    expected = closed_form_w(m, h)
    if wa.num_colors != expected:
        raise VerificationError(f"T({m},{h}) colored with {wa.num_colors} colors, closed form says {expected}")
    return wa
