"""
Runtime configuration for ncgraph.

Values are read from environment variables (a .env file is loaded by the
CLI before this runs) and can then be overridden by command-line flags.
Invalid values raise ConfigError; nothing is silently clamped.
"""
import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any

from ncgraph.errors import ConfigError

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "dot", "csv")
_TRUE = ("1", "true", "yes", "on")
_FALSE = ("0", "false", "no", "off", "")


def _env_int(name: str, default: str) -> int:
    raw = os.getenv(name, default)
    try:
        return int(float(raw)) if "e" in raw.lower() else int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


def _env_bool(name: str, default: str) -> bool:
    raw = os.getenv(name, default).strip().lower()
    if raw in _TRUE:
        return True
    if raw in _FALSE:
        return False
    raise ConfigError(f"{name} must be true or false, got {raw!r}")


@dataclass(frozen=True)
class NcgraphConfig:
    """
    Settings shared by every command.

    Attributes:
        max_order: Largest group order that is materialized
        node_budget: Branch-and-bound node limit for clique searches
        seed: Seed for randomized suites
        output_format: Default output format (json, dot or csv)
        search_max_vertices: Largest non-AC graph whose clique number is searched
        sweep_max_order: Order bound of the equivalence sweep
        chi_max_order: Largest group for which chi-graphs are built
        report_timing: Include per-phase timings in reports
        store_results: Persist reports and verification runs
        database_path: SQLite file of the result history
    """
    max_order: int = 5000
    node_budget: int = 10 ** 8
    seed: int = 0
    output_format: str = "json"
    search_max_vertices: int = 2000
    sweep_max_order: int = 200
    chi_max_order: int = 200
    report_timing: bool = False
    store_results: bool = False
    database_path: str = "data/ncgraph.db"

    @classmethod
    def from_env(cls) -> "NcgraphConfig":
        """Build a validated config from environment variables."""
        config = cls(
            max_order=_env_int("NCGRAPH_MAX_ORDER", "5000"),
            node_budget=_env_int("NCGRAPH_NODE_BUDGET", "100000000"),
            seed=_env_int("NCGRAPH_SEED", "0"),
            output_format=os.getenv("NCGRAPH_FORMAT", "json").strip().lower(),
            search_max_vertices=_env_int("NCGRAPH_SEARCH_MAX_VERTICES", "2000"),
            sweep_max_order=_env_int("NCGRAPH_SWEEP_MAX_ORDER", "200"),
            chi_max_order=_env_int("NCGRAPH_CHI_MAX_ORDER", "200"),
            report_timing=_env_bool("NCGRAPH_REPORT_TIMING", "false"),
            store_results=_env_bool("NCGRAPH_STORE_RESULTS", "false"),
            database_path=os.getenv("DATABASE_PATH", "data/ncgraph.db"),
        )
        config.validate()
        return config

    def with_overrides(self, **overrides: Any) -> "NcgraphConfig":
        """Return a validated copy with every non-None override applied."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigError(f"unknown setting(s): {', '.join(sorted(unknown))}")
        config = replace(self, **{k: v for k, v in overrides.items() if v is not None})
        config.validate()
        return config

    def validate(self) -> None:
        """
        Raises:
            ConfigError: Naming the first invalid setting
        """
        for name in ("max_order", "node_budget", "search_max_vertices", "sweep_max_order", "chi_max_order"):
            value = getattr(self, name)
            if value < 1:
                raise ConfigError(f"{name} must be at least 1, got {value}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"output format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}"
            )
        if not self.database_path:
            raise ConfigError("DATABASE_PATH must not be empty")

    def analysis_options(self) -> dict:
        """Keyword arguments for analyze_group()."""
        return {
            "node_budget": self.node_budget,
            "search_max_vertices": self.search_max_vertices,
            "chi_max_order": self.chi_max_order,
            "timing": self.report_timing,
        }
