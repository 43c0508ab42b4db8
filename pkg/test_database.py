#!/usr/bin/env python3
"""
Tests for the result history database

Runs the storage helpers against a throwaway SQLite file, without going
through the CLI.

Usage:
    pytest test_database.py
"""

import asyncio

import pytest

from ncgraph.analysis import analyze_group
from ncgraph.groups import build_group
from ncgraph.storage import (
    get_latest_reports,
    get_latest_verification_runs,
    init_database,
    insert_report,
    insert_verification_run,
)


@pytest.fixture(autouse=True)
def database_path(tmp_path, monkeypatch):
    path = tmp_path / "data" / "ncgraph_test.db"
    monkeypatch.setenv("DATABASE_PATH", str(path))
    return path


def _summary(passed: int, failed: int) -> dict:
    return {
        "passed": passed,
        "failed": failed,
        "skipped": 14 - passed - failed,
        "seed": 0,
        "max_order": 5000,
        "sweep_size": 61,
        "claims": [],
    }


def test_init_creates_file_and_is_idempotent(database_path):
    assert asyncio.run(init_database())
    assert database_path.exists()
    assert asyncio.run(init_database())


def test_insert_and_query_report():
    async def scenario():
        assert await init_database()
        report = analyze_group(build_group("Q:8")).to_dict()
        assert await insert_report(report)
        return await get_latest_reports(limit=5)

    rows = asyncio.run(scenario())
    assert len(rows) == 1
    row = rows[0]
    assert row["spec"] == "Q:8"
    assert row["group_order"] == "8"
    assert row["is_ac"] == 1
    assert row["omega"] == "3"
    assert row["report"]["omega"]["value"] == 3
    assert row["report"]["witnesses"]["maximal_set_note"] == "size equals omega"


def test_reports_filter_by_spec_newest_first():
    async def scenario():
        await init_database()
        for text in ("D:3", "Q:8", "D:3"):
            await insert_report(analyze_group(build_group(text)).to_dict())
        return await get_latest_reports(spec="D:3"), await get_latest_reports(limit=1)

    d3_rows, latest = asyncio.run(scenario())
    assert [r["spec"] for r in d3_rows] == ["D:3", "D:3"]
    assert d3_rows[0]["id"] > d3_rows[1]["id"]
    assert latest[0]["spec"] == "D:3"


def test_non_ac_report_is_stored():
    async def scenario():
        await init_database()
        await insert_report(analyze_group(build_group("S:4")).to_dict())
        return await get_latest_reports()

    row = asyncio.run(scenario())[0]
    assert row["is_ac"] == 0
    assert row["report"]["pgroup_case"] == "n/a"


def test_insert_and_query_verification_runs():
    async def scenario():
        await init_database()
        assert await insert_verification_run(_summary(14, 0))
        assert await insert_verification_run(_summary(12, 1))
        return await get_latest_verification_runs(limit=10)

    runs = asyncio.run(scenario())
    assert [r["passed"] for r in runs] == [12, 14]
    assert runs[0]["failed"] == 1
    assert runs[0]["summary"]["sweep_size"] == 61


def test_insert_without_tables_reports_failure():
    assert asyncio.run(insert_report({"spec": "Q:8", "order": 8})) is False
    assert asyncio.run(get_latest_reports()) == []


def test_explicit_path_overrides_environment(database_path, tmp_path):
    explicit = tmp_path / "elsewhere" / "history.db"

    async def scenario():
        assert await init_database(str(explicit))
        assert await insert_verification_run(_summary(14, 0), db_path=str(explicit))
        return await get_latest_verification_runs(db_path=str(explicit))

    assert [r["passed"] for r in asyncio.run(scenario())] == [14]
    assert explicit.exists()
    assert not database_path.exists()
