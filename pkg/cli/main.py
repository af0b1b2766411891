from __future__ import annotations

import argparse
import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import List, Optional

from pydantic import ValidationError

from cli.commands import EXIT_BAD_PARAMETERS, EXIT_VERIFICATION, CommandOutput, run_command
from cli.run_config import ColorMethod, DesignKind, Family, OutputFormat, RunConfig
from colorings.greedy import GreedyOrder
from core import live_metrics
from core.config import TreewaveSettings, load_settings
from core.errors import InvalidParameterError, VerificationError
from core.serialization import dumps
from core.tree import SpiderShape
from core.utils import utcnow

logger = logging.getLogger(__name__)


def setup_logging() -> None:
    """Log to stderr (stdout carries data), plus a rotating file when TREEWAVE_LOG_FILE is set."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = os.getenv("TREEWAVE_LOG_FILE")
    if log_file:
        os.makedirs(os.path.dirname(log_file) or ".", exist_ok=True)
        handlers.append(RotatingFileHandler(log_file, maxBytes=5_000_000, backupCount=5))
    logging.basicConfig(
        level=os.getenv("LOG_LEVEL", "INFO"),
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
        handlers=handlers,
    )


def _choices(enum_cls) -> List[str]:
    return [e.value for e in enum_cls]


def build_parser(settings: TreewaveSettings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treewave",
        description="Wavelength assignment for all-to-all routing on tree networks. Height is -H, not -h.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=_choices(OutputFormat), default=settings.default_format)
        p.add_argument("--out", help="Write here instead of stdout")

    def add_family(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", choices=_choices(Family), default=Family.MARY.value)
        p.add_argument("-m", type=int, help="Arity (mary, double)")
        p.add_argument("-H", "--height", dest="h", type=int, help="Height (mary, double)")
        p.add_argument("-k", type=int, help="Root degree (spider)")
        p.add_argument("-t", type=int, help="Component size (spider)")
        p.add_argument("--shape", choices=_choices(SpiderShape), default=SpiderShape.PATH.value)

    def add_mh(p: argparse.ArgumentParser) -> None:
        p.add_argument("-m", type=int, required=True)
        p.add_argument("-H", "--height", dest="h", type=int, required=True)

    def add_budget(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget-ms", type=int, default=settings.budget_ms, help="Soft budget (TREEWAVE_BUDGET_MS)")
        p.add_argument("--max-exact-vertices", type=int, default=settings.max_exact_vertices)

    p = sub.add_parser("build", help="Build a tree (JSON or DOT)")
    add_family(p)
    p.add_argument("--conflict-graph", action="store_true", help="Emit the conflict graph of its routing instead")
    p.add_argument("--max-paths-greedy", type=int, default=settings.max_paths_greedy)
    add_output(p)

    p = sub.add_parser("color", help="Color the all-to-all routing")
    add_family(p)
    p.add_argument("--method", choices=_choices(ColorMethod), default=ColorMethod.CONSTRUCT.value)
    p.add_argument("--order", choices=_choices(GreedyOrder), default=GreedyOrder.CANONICAL.value)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--max-paths", type=int, default=settings.max_paths_constructive)
    p.add_argument("--max-paths-greedy", type=int, default=settings.max_paths_greedy)
    add_output(p)

    p = sub.add_parser("bounds", help="Edge-cut and vertex-cut bounds and the forwarding index")
    add_family(p)
    add_output(p)

    p = sub.add_parser("designs", help="Total colorings of K_n (odd n) and 1-factorizations (even n)")
    p.add_argument("--kind", choices=_choices(DesignKind), default=DesignKind.TOTAL.value)
    p.add_argument("-n", type=int, required=True)
    add_output(p)

    p = sub.add_parser("certify", help="Check a construction against the lower bounds")
    add_mh(p)
    add_budget(p)
    p.add_argument("--max-paths", type=int, default=settings.max_paths_constructive)
    add_output(p)

    p = sub.add_parser("table", help="Closed forms, constructions and bounds over an (m, h) grid")
    p.add_argument("--m-range", required=True, help="e.g. 1..4")
    p.add_argument("--h-range", required=True, help="e.g. 1..3")
    p.add_argument("--max-paths", type=int, default=settings.max_paths_constructive)
    p.add_argument("--n-jobs", type=int, default=settings.table_n_jobs)
    add_output(p)

    p = sub.add_parser("oracle", help="Exact chromatic number of a serialized conflict graph")
    p.add_argument("--input", help="Conflict graph JSON (default: stdin)")
    add_budget(p)
    add_output(p)
    return parser


def render(cfg: RunConfig, output: CommandOutput) -> str:
    if cfg.format is OutputFormat.JSON:
        meta = {"generated_at": utcnow().isoformat(), "command": cfg.subcommand.value}
        return dumps({"meta": meta, "data": output.data})
    if cfg.format is OutputFormat.CSV:
        return output.frame.to_csv(index=False)
    if cfg.format is OutputFormat.DOT:
        return output.dot
    return output.text + "\n"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(text, encoding="utf-8")
    logger.info("Wrote %s", cfg.out)


def main(argv: Optional[List[str]] = None) -> int:
    setup_logging()
    settings = load_settings()
    live_metrics.enable_metrics(settings.metrics_enabled)
    args = build_parser(settings).parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None}

    try:
        cfg = RunConfig(**values)
        output = run_command(cfg)
        _emit(cfg, render(cfg, output))
        code = output.exit_code
    except ValidationError as exc:
        logger.error("Invalid parameters: %s", "; ".join(err["msg"] for err in exc.errors()))
        code = EXIT_BAD_PARAMETERS
    except InvalidParameterError as exc:
        logger.error("Invalid parameters: %s", exc)
        code = EXIT_BAD_PARAMETERS
    except VerificationError as exc:
        logger.error("Self-verification failed: %s (%s violations)", exc, len(exc.violations))
        code = EXIT_VERIFICATION

    live_metrics.write_textfile(settings.metrics_textfile)
    return code


if __name__ == "__main__":
    sys.exit(main())
