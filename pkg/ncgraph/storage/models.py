"""
Database schema definitions for the ncgraph result history

Analysis reports and verification runs are stored as JSON documents with a
few indexed columns for lookups.

Schema Version: 1.0.0
"""

SCHEMA_VERSION = "1.0.0"

# =============================================================================
# Analysis Reports Table
# =============================================================================
# One row per analyzed group. report_json holds AnalysisReport.to_dict().
#
# Examples:
#   - spec='Q:8', group_order=8, is_ac=1, omega='3'
#   - spec='S:4', group_order=24, is_ac=0, omega='4'
#   - spec='A:12', group_order=239500800, is_ac=NULL, omega='not computed'

CREATE_ANALYSIS_REPORTS_TABLE = """
CREATE TABLE IF NOT EXISTS analysis_reports (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    ts DATETIME NOT NULL DEFAULT CURRENT_TIMESTAMP,
    spec TEXT NOT NULL,
    group_order TEXT NOT NULL,
    is_ac INTEGER,
    omega TEXT,
    report_json TEXT NOT NULL
);
"""

CREATE_ANALYSIS_REPORTS_INDEXES = """
CREATE INDEX IF NOT EXISTS idx_reports_ts ON analysis_reports(ts);
CREATE INDEX IF NOT EXISTS idx_reports_spec ON analysis_reports(spec);
"""

# =============================================================================
# Verification Runs Table
# =============================================================================
# One row per `verify` invocation. summary_json holds the claim table.
#
# Examples:
#   - passed=14, failed=0, skipped=0, seed=0, max_order=5000
#   - passed=12, failed=1, skipped=1 (a corrupt fixture was injected)

CREATE_VERIFICATION_RUNS_TABLE = """
CREATE TABLE IF NOT EXISTS verification_runs (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    ts DATETIME NOT NULL DEFAULT CURRENT_TIMESTAMP,
    passed INTEGER NOT NULL,
    failed INTEGER NOT NULL,
    skipped INTEGER NOT NULL,
    seed INTEGER NOT NULL,
    max_order INTEGER NOT NULL,
    summary_json TEXT NOT NULL
);
"""

CREATE_VERIFICATION_RUNS_INDEXES = """
CREATE INDEX IF NOT EXISTS idx_runs_ts ON verification_runs(ts);
"""

# =============================================================================
# Schema Version Table
# =============================================================================

CREATE_SCHEMA_VERSION_TABLE = """
CREATE TABLE IF NOT EXISTS schema_version (
    version TEXT PRIMARY KEY,
    applied_ts DATETIME NOT NULL DEFAULT CURRENT_TIMESTAMP
);
"""

INSERT_SCHEMA_VERSION = """
INSERT OR IGNORE INTO schema_version (version) VALUES (?);
"""
