from __future__ import annotations

import pytest

from core.errors import InvalidParameterError
from designs.factorization import (
    EdgeColoring,
    as_rows,
    color_classes,
    one_factorization,
    validate_edge_coloring,
)


def test_k4_splits_into_three_matchings() -> None:
    ec = one_factorization(4)

    assert ec.num_colors == 3
    assert all(len(pairs) == 2 for pairs in color_classes(ec).values())
    assert validate_edge_coloring(ec)


def test_k2_and_k6() -> None:
    assert one_factorization(2).edge_color == {(0, 1): 0}

    k6 = one_factorization(6)
    assert k6.num_colors == 5
    assert [len(pairs) for pairs in color_classes(k6).values()] == [3] * 5


@pytest.mark.parametrize("m", range(2, 101, 2))
def test_round_robin_is_a_one_factorization(m: int) -> None:
    ec = one_factorization(m)

    assert validate_edge_coloring(ec)
    assert ec.num_colors == m - 1
    assert sorted(color_classes(ec)) == list(range(m - 1))


def test_two_colors_cannot_factor_k4() -> None:
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    two = EdgeColoring(m=4, edge_color={p: i % 2 for i, p in enumerate(pairs)})

    assert not validate_edge_coloring(two)


def test_uneven_classes_fail_validation() -> None:
    assert not validate_edge_coloring(EdgeColoring(m=4, edge_color={(0, 1): 0}))


def test_odd_m_is_rejected() -> None:
    with pytest.raises(InvalidParameterError):
        one_factorization(5)
    with pytest.raises(InvalidParameterError):
        one_factorization(0)


def test_rows_list_each_matching() -> None:
    rows = as_rows(one_factorization(4))

    assert len(rows) == 3
    assert rows[0]["color"] == 0
    assert all(len(row["matching"].split()) == 2 for row in rows)
