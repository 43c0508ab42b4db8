"""
Database operations for the ncgraph result history

Async helpers for storing and querying analysis reports and verification
runs. Every operation opens its own aiosqlite connection and closes it when
done; failures are logged and reported through the return value. Each
operation takes an optional db_path; without one the DATABASE_PATH
environment variable decides.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import aiosqlite

from .models import (
    SCHEMA_VERSION,
    CREATE_ANALYSIS_REPORTS_TABLE,
    CREATE_ANALYSIS_REPORTS_INDEXES,
    CREATE_VERIFICATION_RUNS_TABLE,
    CREATE_VERIFICATION_RUNS_INDEXES,
    CREATE_SCHEMA_VERSION_TABLE,
    INSERT_SCHEMA_VERSION,
)

logger = logging.getLogger(__name__)


async def get_connection(db_path: Optional[str] = None) -> aiosqlite.Connection:
    """
    Get database connection.

    Creates the database file and parent directory if they don't exist.

    Args:
        db_path: SQLite file (default: DATABASE_PATH, then data/ncgraph.db)

    Returns:
        aiosqlite.Connection: Database connection
    """
    db_path = db_path or os.getenv("DATABASE_PATH", "data/ncgraph.db")
    Path(db_path).parent.mkdir(parents=True, exist_ok=True)
    return await aiosqlite.connect(db_path)


async def init_database(db_path: Optional[str] = None) -> bool:
    """
    Create all tables and indexes.

    Idempotent: tables are created with IF NOT EXISTS and the schema version
    is recorded once.

    Returns:
        bool: True if successful, False otherwise
    """
    db = None
    try:
        db = await get_connection(db_path)

        await db.execute(CREATE_ANALYSIS_REPORTS_TABLE)
        await db.executescript(CREATE_ANALYSIS_REPORTS_INDEXES)
        logger.debug("Created analysis_reports table")

        await db.execute(CREATE_VERIFICATION_RUNS_TABLE)
        await db.executescript(CREATE_VERIFICATION_RUNS_INDEXES)
        logger.debug("Created verification_runs table")

        await db.execute(CREATE_SCHEMA_VERSION_TABLE)
        cursor = await db.execute("SELECT version FROM schema_version ORDER BY applied_ts DESC LIMIT 1")
        row = await cursor.fetchone()
        current_version = row[0] if row else None
        if current_version != SCHEMA_VERSION:
            await db.execute(INSERT_SCHEMA_VERSION, (SCHEMA_VERSION,))
            logger.info(f"Database schema set to v{SCHEMA_VERSION} (was {current_version or 'empty'})")

        await db.commit()
        logger.info(f"Database initialized successfully (schema v{SCHEMA_VERSION})")
        return True

    except Exception as e:
        logger.error(f"Failed to initialize database: {e}", exc_info=True)
        return False
    finally:
        if db:
            await db.close()


async def insert_report(report: Dict[str, Any], db_path: Optional[str] = None) -> bool:
    """
    Store one analysis report.

    Args:
        report: AnalysisReport.to_dict() output

    Returns:
        bool: True if successful, False otherwise

    Examples:
        >>> await insert_report(analyze_group(build_group("Q:8")).to_dict())
        True
    """
    db = None
    try:
        is_ac = report.get("is_ac")
        omega = report.get("omega")
        if isinstance(omega, dict):
            omega = omega.get("value")
        db = await get_connection(db_path)
        await db.execute(
            """
            INSERT INTO analysis_reports
            (spec, group_order, is_ac, omega, report_json)
            VALUES (?, ?, ?, ?, ?)
            """,
            (
                report["spec"],
                str(report["order"]),
                int(is_ac) if isinstance(is_ac, bool) else None,
                str(omega),
                json.dumps(report, sort_keys=False),
            ),
        )
        await db.commit()
        logger.debug(f"Inserted report: {report['spec']}")
        return True

    except Exception as e:
        logger.error(f"Failed to insert report: {e}", exc_info=True)
        return False
    finally:
        if db:
            await db.close()


async def insert_verification_run(summary: Dict[str, Any], db_path: Optional[str] = None) -> bool:
    """
    Store one verification run.

    Args:
        summary: Output of run_verification(): counts, seed, max_order and claims

    Returns:
        bool: True if successful, False otherwise
    """
    db = None
    try:
        db = await get_connection(db_path)
        await db.execute(
            """
            INSERT INTO verification_runs
            (passed, failed, skipped, seed, max_order, summary_json)
            VALUES (?, ?, ?, ?, ?, ?)
            """,
            (
                summary["passed"],
                summary["failed"],
                summary["skipped"],
                summary["seed"],
                summary["max_order"],
                json.dumps(summary),
            ),
        )
        await db.commit()
        logger.debug(f"Inserted verification run: {summary['passed']} passed, {summary['failed']} failed")
        return True

    except Exception as e:
        logger.error(f"Failed to insert verification run: {e}", exc_info=True)
        return False
    finally:
        if db:
            await db.close()


async def get_latest_reports(
    spec: Optional[str] = None, limit: int = 20, db_path: Optional[str] = None
) -> List[Dict[str, Any]]:
    """
    Get the most recent stored reports, newest first.

    Args:
        spec: Only reports for this canonical spec (optional)
        limit: Maximum number of rows to return (default: 20)

    Returns:
        List[Dict[str, Any]]: Rows with the decoded report under "report"
    """
    db = None
    try:
        db = await get_connection(db_path)
        db.row_factory = aiosqlite.Row

        if spec:
            cursor = await db.execute(
                "SELECT * FROM analysis_reports WHERE spec = ? ORDER BY id DESC LIMIT ?",
                (spec, limit),
            )
        else:
            cursor = await db.execute(
                "SELECT * FROM analysis_reports ORDER BY id DESC LIMIT ?",
                (limit,),
            )

        rows = await cursor.fetchall()
        results = []
        for row in rows:
            entry = dict(row)
            entry["report"] = json.loads(entry.pop("report_json"))
            results.append(entry)
        return results

    except Exception as e:
        logger.error(f"Failed to get latest reports: {e}", exc_info=True)
        return []
    finally:
        if db:
            await db.close()


async def get_latest_verification_runs(limit: int = 10, db_path: Optional[str] = None) -> List[Dict[str, Any]]:
    """
    Get the most recent verification runs, newest first.

    Args:
        limit: Maximum number of rows to return (default: 10)

    Returns:
        List[Dict[str, Any]]: Rows with the decoded summary under "summary"
    """
    db = None
    try:
        db = await get_connection(db_path)
        db.row_factory = aiosqlite.Row
        cursor = await db.execute(
            "SELECT * FROM verification_runs ORDER BY id DESC LIMIT ?",
            (limit,),
        )
        rows = await cursor.fetchall()
        results = []
        for row in rows:
            entry = dict(row)
            entry["summary"] = json.loads(entry.pop("summary_json"))
            results.append(entry)
        return results

    except Exception as e:
        logger.error(f"Failed to get verification runs: {e}", exc_info=True)
        return []
    finally:
        if db:
            await db.close()
