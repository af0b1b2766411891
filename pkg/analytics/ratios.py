from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Tuple

from core.errors import InvalidParameterError
from core.tree import geometric_count


def closed_form_w(m: int, h: int) -> int:
    """Optical index of the complete m-ary tree of height h."""
    if m < 1 or h < 0:
        raise InvalidParameterError(f"need m >= 1 and h >= 0, got m={m}, h={h}")
    if h == 0:
        return 0
    if m == 1:
        return ((h + 1) // 2) * ((h + 2) // 2)
    if m == 2:
        if h == 1:
            return 2
        if h == 2:
            return 12
        return 5 * 2 ** (2 * h - 2) - 3 * 2 ** h + 1
    t = geometric_count(m, h)
    if m % 2 == 1:
        return m * t * t
    return m ** h * t


def closed_form_pi_mary(m: int, h: int) -> int:
    """Max edge load of T_{m,h}, attained at a root edge."""
    if m < 1 or h < 0:
        raise InvalidParameterError(f"need m >= 1 and h >= 0, got m={m}, h={h}")
    if h == 0:
        return 0
    if m == 1:
        return ((h + 1) // 2) * ((h + 2) // 2)
    below = geometric_count(m, h)
    n = geometric_count(m, h + 1)
    return below * (n - below)


def closed_form_pi_spider(k: int, t: int) -> int:
    if k < 2:
        raise InvalidParameterError(f"the spider formula assumes k >= 2, got k={k}")
    if t < 1:
        raise InvalidParameterError(f"t must be >= 1, got {t}")
    return (k - 1) * t * t + t


def _require_odd_k(k: int) -> None:
    if k < 3 or k % 2 == 0:
        raise InvalidParameterError(f"w(G_k,t) is only known for odd k >= 3, got k={k}")


def ratio_w_over_pi_spider(k: int, t: int) -> Fraction:
    """kt / ((k-1)t + 1), i.e. kt² over (k-1)t² + t."""
    _require_odd_k(k)
    if t < 1:
        raise InvalidParameterError(f"t must be >= 1, got {t}")
    return Fraction(k * t, (k - 1) * t + 1)


def spider_ratio_sweep(k: int, ts: Iterable[int]) -> Tuple[List[Fraction], Fraction]:
    """Ratios for each t and the limit k/(k-1) they approach."""
    return [ratio_w_over_pi_spider(k, t) for t in ts], Fraction(k, k - 1)


class FamilyKind(str, Enum):
    BINARY = "binary"
    SPIDER = "spider"


@dataclass(frozen=True)
class FeasibleDelta:
    delta: Fraction
    family: str


def feasible_delta_family(kind: FamilyKind | str, *, h: int = 0, k: int = 0, t: int = 0) -> FeasibleDelta:
    """A realizable w/π together with the tree family that realizes it."""
    kind = FamilyKind(kind)
    if kind is FamilyKind.BINARY:
        if h < 3:
            raise InvalidParameterError(f"the binary family needs h >= 3, got h={h}")
        extra = Fraction(2 ** (2 * h - 2) - 2 ** (h + 1) + 1, 2 ** (2 * h) - 2 ** h)
        return FeasibleDelta(delta=1 + extra, family=f"mary(2,{h})")

    _require_odd_k(k)
    if t < 1:
        raise InvalidParameterError(f"t must be >= 1, got {t}")
    return FeasibleDelta(delta=1 + Fraction(t - 1, (k - 1) * t + 1), family=f"spider({k},{t})")
