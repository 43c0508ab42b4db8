"""
Tests for environment-driven configuration.

Usage:
    pytest test_config.py
"""
import pytest

from ncgraph.config import NcgraphConfig
from ncgraph.errors import ConfigError

ENV_NAMES = [
    "NCGRAPH_MAX_ORDER",
    "NCGRAPH_NODE_BUDGET",
    "NCGRAPH_SEED",
    "NCGRAPH_FORMAT",
    "NCGRAPH_SEARCH_MAX_VERTICES",
    "NCGRAPH_SWEEP_MAX_ORDER",
    "NCGRAPH_CHI_MAX_ORDER",
    "NCGRAPH_REPORT_TIMING",
    "NCGRAPH_STORE_RESULTS",
    "DATABASE_PATH",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_NAMES:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    config = NcgraphConfig.from_env()
    assert config == NcgraphConfig()
    assert config.max_order == 5000
    assert config.node_budget == 10 ** 8
    assert config.output_format == "json"
    assert config.database_path == "data/ncgraph.db"


def test_environment_values(monkeypatch):
    monkeypatch.setenv("NCGRAPH_MAX_ORDER", "120")
    monkeypatch.setenv("NCGRAPH_NODE_BUDGET", "1e6")
    monkeypatch.setenv("NCGRAPH_FORMAT", " DOT ")
    monkeypatch.setenv("NCGRAPH_REPORT_TIMING", "yes")
    config = NcgraphConfig.from_env()
    assert config.max_order == 120
    assert config.node_budget == 1000000
    assert config.output_format == "dot"
    assert config.report_timing is True


@pytest.mark.parametrize("name,value", [
    ("NCGRAPH_MAX_ORDER", "lots"),
    ("NCGRAPH_MAX_ORDER", "0"),
    ("NCGRAPH_SEED", "-1"),
    ("NCGRAPH_FORMAT", "xml"),
    ("NCGRAPH_STORE_RESULTS", "maybe"),
])
def test_invalid_environment(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        NcgraphConfig.from_env()


def test_overrides_skip_none_and_validate():
    config = NcgraphConfig().with_overrides(max_order=None, seed=7, output_format="csv")
    assert config.max_order == 5000
    assert config.seed == 7
    assert config.output_format == "csv"
    with pytest.raises(ConfigError):
        config.with_overrides(node_budget=0)
    with pytest.raises(ConfigError):
        config.with_overrides(colour="blue")


def test_analysis_options():
    options = NcgraphConfig(search_max_vertices=50, report_timing=True).analysis_options()
    assert options == {
        "node_budget": 10 ** 8,
        "search_max_vertices": 50,
        "chi_max_order": 200,
        "timing": True,
    }
