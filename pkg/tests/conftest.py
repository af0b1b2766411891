import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from core.routing import all_pairs_routing, conflict_graph  # noqa: E402
from core.tree import build_complete_mary_tree  # noqa: E402


@pytest.fixture
def binary_h2():
    return build_complete_mary_tree(2, 2)


@pytest.fixture
def ternary_h1_graph():
    return conflict_graph(all_pairs_routing(build_complete_mary_tree(3, 1)))


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    for name in (
        "TREEWAVE_CONFIG",
        "TREEWAVE_BUDGET_MS",
        "TREEWAVE_MAX_PATHS",
        "TREEWAVE_MAX_EXACT_VERTICES",
        "TREEWAVE_N_JOBS",
        "TREEWAVE_METRICS_FILE",
        "TREEWAVE_LOG_FILE",
    ):
        monkeypatch.delenv(name, raising=False)
