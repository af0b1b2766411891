from __future__ import annotations

"""Prometheus-compatible counters with a safe fallback.

Importable without ``prometheus_client``: every function becomes a no-op.
Nothing is served over HTTP; ``write_textfile`` dumps the registry for a
node-exporter textfile collector.
"""

import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional

logger = logging.getLogger(__name__)

_ENABLED = False
_PROM: Any = None  # lazy import container
_m: Dict[str, Any] = {}


def enabled() -> bool:
    return _ENABLED


def _lazy_import() -> bool:
    global _PROM
    if _PROM is not None:
        return bool(_PROM)
    try:
        import prometheus_client  # type: ignore

        _PROM = prometheus_client
        return True
    except Exception as e:
        logger.warning("prometheus_client not available; metrics disabled (%r)", e)
        _PROM = False
        return False


def enable_metrics(flag: bool = True) -> bool:
    """Create the metric objects in a private registry. Returns the new state."""
    global _ENABLED, _m

    if not flag or not _lazy_import():
        _ENABLED = False
        return False
    if _m:
        _ENABLED = True
        return True

    registry = _PROM.CollectorRegistry()
    _m = {
        "registry": registry,
        "colorings_total": _PROM.Counter(
            "treewave_colorings_total", "Wavelength assignments produced", ["method"], registry=registry
        ),
        "violations_total": _PROM.Counter(
            "treewave_verify_violations_total", "Conflicting same-colored path pairs found", registry=registry
        ),
        "budget_exhausted_total": _PROM.Counter(
            "treewave_exact_budget_exhausted_total", "Exact searches stopped by their budget", registry=registry
        ),
        "operation_seconds": _PROM.Histogram(
            "treewave_operation_seconds", "Wall-clock time per operation", ["operation"], registry=registry
        ),
    }
    _ENABLED = True
    return True


def on_coloring(method: str) -> None:
    if _ENABLED:
        _m["colorings_total"].labels(method=method).inc()


def on_violations(count: int) -> None:
    if _ENABLED and count:
        _m["violations_total"].inc(count)


def on_budget_exhausted() -> None:
    if _ENABLED:
        _m["budget_exhausted_total"].inc()


@contextmanager
def timed(operation: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    finally:
        if _ENABLED:
            _m["operation_seconds"].labels(operation=operation).observe(time.perf_counter() - start)


def write_textfile(path: Optional[str]) -> bool:
    if not _ENABLED or not path:
        return False
    _PROM.write_to_textfile(path, _m["registry"])
    logger.info("Metrics written to %s", path)
    return True
