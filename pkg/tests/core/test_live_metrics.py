from __future__ import annotations

from pathlib import Path

import pytest

from core import live_metrics


def test_disabled_metrics_are_no_ops(tmp_path: Path) -> None:
    live_metrics.enable_metrics(False)

    live_metrics.on_coloring("greedy")
    with live_metrics.timed("color"):
        pass
    assert live_metrics.write_textfile(str(tmp_path / "m.prom")) is False
    assert not (tmp_path / "m.prom").exists()


def test_textfile_export(tmp_path: Path) -> None:
    pytest.importorskip("prometheus_client")
    target = tmp_path / "m.prom"
    try:
        assert live_metrics.enable_metrics(True)
        live_metrics.on_coloring("interval")
        live_metrics.on_violations(2)
        with live_metrics.timed("certify"):
            pass

        assert live_metrics.write_textfile(str(target))
        text = target.read_text(encoding="utf-8")
        assert 'treewave_colorings_total{method="interval"}' in text
        assert "treewave_verify_violations_total" in text
        assert 'operation="certify"' in text
    finally:
        live_metrics.enable_metrics(False)
