from __future__ import annotations

from datetime import datetime, timezone
from typing import List

from core.errors import InvalidParameterError


def utcnow() -> datetime:
    return datetime.now(timezone.utc)


def parse_int_range(text: str) -> List[int]:
    """``"1..4"`` -> [1, 2, 3, 4]; a bare ``"3"`` -> [3]."""
    raw = text.strip()
    try:
        if ".." in raw:
            lo_s, hi_s = raw.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(raw)
    except ValueError as exc:
        raise InvalidParameterError(f"bad range {text!r}; expected LO..HI") from exc
    if hi < lo:
        raise InvalidParameterError(f"empty range {text!r}")
    return list(range(lo, hi + 1))
