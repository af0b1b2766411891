from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from colorings.greedy import GreedyOrder
from core.tree import SpiderShape
from core.utils import parse_int_range


class Subcommand(str, Enum):
    BUILD = "build"
    COLOR = "color"
    BOUNDS = "bounds"
    DESIGNS = "designs"
    CERTIFY = "certify"
    TABLE = "table"
    ORACLE = "oracle"


class Family(str, Enum):
    MARY = "mary"
    SPIDER = "spider"
    DOUBLE = "double"


class ColorMethod(str, Enum):
    CONSTRUCT = "construct"
    GREEDY = "greedy"


class DesignKind(str, Enum):
    TOTAL = "total"
    FACTORIZATION = "factorization"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    DOT = "dot"
    TEXT = "text"


_FORMATS = {
    Subcommand.BUILD: {OutputFormat.JSON, OutputFormat.DOT, OutputFormat.TEXT},
    Subcommand.COLOR: {OutputFormat.JSON, OutputFormat.CSV, OutputFormat.TEXT},
    Subcommand.BOUNDS: {OutputFormat.JSON, OutputFormat.TEXT},
    Subcommand.DESIGNS: {OutputFormat.JSON, OutputFormat.CSV, OutputFormat.TEXT},
    Subcommand.CERTIFY: {OutputFormat.JSON, OutputFormat.TEXT},
    Subcommand.TABLE: {OutputFormat.JSON, OutputFormat.CSV, OutputFormat.TEXT},
    Subcommand.ORACLE: {OutputFormat.JSON, OutputFormat.TEXT},
}


class RunConfig(BaseModel):
    """One CLI invocation, validated before any work is dispatched."""

    model_config = ConfigDict(extra="forbid")

    subcommand: Subcommand
    family: Family = Family.MARY
    m: Optional[int] = None
    h: Optional[int] = None
    k: Optional[int] = None
    t: Optional[int] = None
    n: Optional[int] = None
    shape: SpiderShape = SpiderShape.PATH
    method: ColorMethod = ColorMethod.CONSTRUCT
    order: GreedyOrder = GreedyOrder.CANONICAL
    kind: DesignKind = DesignKind.TOTAL
    format: OutputFormat = OutputFormat.JSON
    budget_ms: int = Field(60_000, ge=0)
    max_paths: int = Field(50_000, ge=1)
    max_paths_greedy: int = Field(5_000, ge=1)
    max_exact_vertices: int = Field(100, ge=0)
    n_jobs: int = 1
    m_range: Optional[str] = None
    h_range: Optional[str] = None
    out: Optional[Path] = None
    input: Optional[Path] = None
    verify: bool = False
    conflict_graph: bool = False

    @model_validator(mode="after")
    def _check_parameters(self) -> "RunConfig":
        if self.format not in _FORMATS[self.subcommand]:
            raise ValueError(f"{self.subcommand.value} cannot write {self.format.value}")
        if self.conflict_graph and self.format is OutputFormat.DOT:
            raise ValueError("conflict graphs are written as json or text, not dot")

        if self.subcommand in (Subcommand.BUILD, Subcommand.COLOR, Subcommand.BOUNDS):
            self._check_family()
        elif self.subcommand is Subcommand.CERTIFY:
            self._require("m", 1)
            self._require("h", 1)
        elif self.subcommand is Subcommand.DESIGNS:
            self._require("n", 1)
            if self.kind is DesignKind.TOTAL and self.n % 2 == 0:
                raise ValueError(f"total colorings need an odd n, got {self.n}")
            if self.kind is DesignKind.FACTORIZATION and (self.n < 2 or self.n % 2 == 1):
                raise ValueError(f"1-factorizations need an even n >= 2, got {self.n}")
        elif self.subcommand is Subcommand.TABLE:
            if not self.m_range or not self.h_range:
                raise ValueError("table needs --m-range and --h-range")
            if min(parse_int_range(self.m_range)) < 1 or min(parse_int_range(self.h_range)) < 1:
                raise ValueError("table ranges must start at 1 or above")
        return self

    def _require(self, name: str, minimum: int) -> None:
        value = getattr(self, name)
        if value is None:
            raise ValueError(f"{self.subcommand.value} needs a value for {name}")
        if value < minimum:
            raise ValueError(f"{name} must be >= {minimum}, got {value}")

    def _check_family(self) -> None:
        construct = self.subcommand is Subcommand.COLOR and self.method is ColorMethod.CONSTRUCT
        if self.family is Family.MARY:
            self._require("m", 1)
            self._require("h", 1 if construct else 0)
        elif self.family is Family.SPIDER:
            self._require("k", 1)
            self._require("t", 1)
            if construct and (self.k < 3 or self.k % 2 == 0):
                raise ValueError(f"constructive spider colorings need an odd k >= 3, got {self.k}")
        else:
            self._require("m", 2)
            self._require("h", 1)
            if construct and (self.m < 4 or self.m % 2 == 1):
                raise ValueError(f"constructive double-tree colorings need an even m >= 4, got {self.m}")
