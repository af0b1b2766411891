from __future__ import annotations

import pytest

from analytics.ratios import closed_form_w
from colorings.base import Method, verify_assignment
from colorings.dispatch import color_mary
from core.errors import InvalidParameterError


@pytest.mark.parametrize(
    "m,h,expected,method",
    [
        (1, 3, 4, Method.INTERVAL),
        (1, 4, 6, Method.INTERVAL),
        (2, 2, 12, Method.TABLE_BASE),
        (2, 3, 57, Method.BINARY_CANONICAL),
        (3, 2, 48, Method.ODD_TOTAL),
        (3, 3, 507, Method.ODD_TOTAL),
        (4, 2, 80, Method.EVEN_RECURSIVE),
        (5, 2, 180, Method.ODD_TOTAL),
        (6, 2, 252, Method.EVEN_RECURSIVE),
    ],
)
def test_color_mary_dispatch(m: int, h: int, expected: int, method: Method) -> None:
    wa = color_mary(m, h)

    assert wa.num_colors == expected
    assert wa.method is method
    assert verify_assignment(wa.routing, wa).proper


@pytest.mark.slow
@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("h", range(1, 4))
def test_grid_matches_closed_form(m: int, h: int) -> None:
    wa = color_mary(m, h)

    assert wa.num_colors == closed_form_w(m, h)
    assert sorted(set(wa.colors)) == list(range(wa.num_colors))
    assert verify_assignment(wa.routing, wa).proper


def test_height_zero_has_no_paths() -> None:
    wa = color_mary(4, 0)

    assert wa.num_colors == 0
    assert wa.colors == ()
    assert wa.proper


def test_runs_are_identical() -> None:
    assert color_mary(4, 2).colors == color_mary(4, 2).colors


def test_bad_parameters() -> None:
    with pytest.raises(InvalidParameterError):
        color_mary(0, 2)
    with pytest.raises(InvalidParameterError):
        color_mary(2, -1)
