from __future__ import annotations

import pytest

from colorings.base import Method
from colorings.interval import color_path_tree
from core.errors import InvalidParameterError


@pytest.mark.parametrize("h,expected", [(1, 1), (2, 2), (3, 4), (4, 6), (5, 9), (6, 12)])
def test_interval_coloring_meets_max_load(h: int, expected: int) -> None:
    wa = color_path_tree(h)

    assert wa.num_colors == expected
    assert wa.proper
    assert wa.method is Method.INTERVAL


def test_interval_coloring_rejects_height_zero() -> None:
    with pytest.raises(InvalidParameterError):
        color_path_tree(0)
