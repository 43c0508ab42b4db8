"""
Result history storage for ncgraph.

- init_database() - Create tables
- insert_report() - Store an analysis report
- insert_verification_run() - Store a verification summary
- get_latest_reports() - Query recent reports
- get_latest_verification_runs() - Query recent verification runs
"""

from .db import (
    init_database,
    get_connection,
    insert_report,
    insert_verification_run,
    get_latest_reports,
    get_latest_verification_runs,
)

__all__ = [
    "init_database",
    "get_connection",
    "insert_report",
    "insert_verification_run",
    "get_latest_reports",
    "get_latest_verification_runs",
]
