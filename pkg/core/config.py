from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[1] / "config" / "treewave.yaml"


@dataclass
class TreewaveSettings:
    budget_ms: int = 60_000
    max_paths_constructive: int = 50_000
    max_paths_greedy: int = 5_000
    max_exact_vertices: int = 100
    table_n_jobs: int = 1
    default_format: str = "json"
    metrics_enabled: bool = False
    metrics_textfile: Optional[str] = None

    @classmethod
    def from_yaml(cls, yaml_cfg: Dict[str, Any]) -> "TreewaveSettings":
        cfg = (yaml_cfg or {}).get("treewave", {}) or {}
        metrics = cfg.get("metrics", {}) or {}
        textfile = os.getenv("TREEWAVE_METRICS_FILE", metrics.get("textfile"))
        return cls(
            budget_ms=int(os.getenv("TREEWAVE_BUDGET_MS", cfg.get("budget_ms", 60_000))),
            max_paths_constructive=int(os.getenv("TREEWAVE_MAX_PATHS", cfg.get("max_paths_constructive", 50_000))),
            max_paths_greedy=int(cfg.get("max_paths_greedy", 5_000)),
            max_exact_vertices=int(os.getenv("TREEWAVE_MAX_EXACT_VERTICES", cfg.get("max_exact_vertices", 100))),
            table_n_jobs=int(os.getenv("TREEWAVE_N_JOBS", cfg.get("table_n_jobs", 1))),
            default_format=str(cfg.get("default_format", "json")),
            metrics_enabled=bool(metrics.get("enabled", False)) or textfile is not None,
            metrics_textfile=textfile,
        )


def load_settings(path: str | Path | None = None) -> TreewaveSettings:
    """Read settings from ``path``, ``$TREEWAVE_CONFIG`` or the bundled YAML.

    A missing file is not an error: defaults and environment overrides apply.
    """
    cfg_path = Path(path or os.getenv("TREEWAVE_CONFIG") or DEFAULT_CONFIG_PATH)
    if not cfg_path.exists():
        logger.debug("No config at %s; using defaults", cfg_path)
        return TreewaveSettings.from_yaml({})

    with open(cfg_path, "r", encoding="utf-8") as f:
        cfg = yaml.safe_load(f) or {}
    settings = TreewaveSettings.from_yaml(cfg)
    logger.debug("Loaded settings from %s: %s", cfg_path, settings)
    return settings
