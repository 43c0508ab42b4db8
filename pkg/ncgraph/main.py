"""
ncgraph - command-line entry point

Commands:
- analyze SPEC...   JSON analysis report per group, in input order
- verify            run the built-in claims and print the pass/fail table
- export SPEC       write the non-commuting graph (json, dot, csv) or, with --cayley, its Cayley table
- import PATH       validate and analyze a Cayley table file
- families          list the built-in group families
- history           show stored reports and verification runs

Exit codes: 0 success, 1 verification failure, 2 usage, parse or build error.
Logs go to stderr so stdout carries only artifacts.
"""
import argparse
import asyncio
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

from dotenv import load_dotenv

from ncgraph import __version__
from ncgraph.analysis import analyze, build_ncg
from ncgraph.config import OUTPUT_FORMATS, NcgraphConfig
from ncgraph.errors import CapExceeded, ConfigError, NcgraphError
from ncgraph.graphs import to_csv, to_dot, to_json
from ncgraph.groups import FiniteGroup, LazyPermGroup, build_group, dump_cayley_table, family_catalog, load_cayley_table
from ncgraph.runner import FAIL, run_verification
from ncgraph.storage import (
    get_latest_reports,
    get_latest_verification_runs,
    init_database,
    insert_report,
    insert_verification_run,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


# =============================================================================
# Parser
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, metavar="N", help="materialization cap (default 5000)")
    common.add_argument("--node-budget", type=int, metavar="N", help="clique search node limit")
    common.add_argument("--seed", type=int, metavar="N", help="seed for randomized suites (default 0)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, dest="output_format", help="output format")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--timing", action="store_true", default=None, help="include per-phase timings")
    common.add_argument("--store", action="store_true", default=None, help="record results in the history database")

    parser = argparse.ArgumentParser(
        prog="ncgraph",
        description="Non-commuting graphs of finite groups and their matroid structure.",
    )
    parser.add_argument("--version", action="version", version=f"ncgraph {__version__}")
    parser.add_argument("--log-level", metavar="LEVEL", help="override LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze_cmd = commands.add_parser("analyze", parents=[common], help="analyze groups given by spec")
    analyze_cmd.add_argument("specs", nargs="+", metavar="SPEC", help='e.g. "Q:8" or "Q:16xC:3"')

    verify_cmd = commands.add_parser("verify", parents=[common], help="run the built-in verification claims")
    verify_cmd.add_argument(
        "--fixture", action="append", default=[], metavar="PATH",
        help="add a Cayley table file to the equivalence sweep (repeatable)",
    )

    export_cmd = commands.add_parser(
        "export", parents=[common],
        help="export the non-commuting graph (json graph document by default) or a Cayley table",
    )
    export_cmd.add_argument("spec", nargs="?", metavar="SPEC")
    export_cmd.add_argument("--table", metavar="PATH", help="export from a Cayley table file instead of a spec")
    export_cmd.add_argument("--complement", action="store_true", help="export the complement graph")
    export_cmd.add_argument(
        "--cayley", action="store_true",
        help="write the group's Cayley table document (the format read by import) instead of a graph",
    )

    import_cmd = commands.add_parser("import", parents=[common], help="validate and analyze a Cayley table")
    import_cmd.add_argument("path", metavar="PATH")

    commands.add_parser("families", parents=[common], help="list group families")

    history_cmd = commands.add_parser("history", parents=[common], help="show stored results")
    history_cmd.add_argument("--spec", help="only reports for this spec")
    history_cmd.add_argument("--limit", type=int, default=20, help="rows per table (default 20)")
    return parser


def configure_logging(level_name: str) -> None:
    """Send logs to stderr at the named level; unknown names raise ConfigError."""
    level = level_name.strip().upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"LOG_LEVEL must be one of DEBUG, INFO, WARNING, ERROR, CRITICAL, got {level_name!r}")
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def resolve_config(args: argparse.Namespace) -> NcgraphConfig:
    """Environment first, then explicit flags."""
    return NcgraphConfig.from_env().with_overrides(
        max_order=args.max_order,
        node_budget=args.node_budget,
        seed=args.seed,
        output_format=args.output_format,
        report_timing=args.timing,
        store_results=args.store,
    )


# =============================================================================
# Output helpers
# =============================================================================

def emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2)


def _require_materialized(group: Any, max_order: int) -> FiniteGroup:
    if isinstance(group, LazyPermGroup):
        raise CapExceeded(group.order, max_order)
    return group


async def _in_executor(func, *args) -> Any:
    loop = asyncio.get_running_loop()
    return await loop.run_in_executor(None, func, *args)


async def _store_reports(reports: List[dict], db_path: str) -> None:
    if not await init_database(db_path):
        logger.error("History database unavailable; results not stored")
        return
    for report in reports:
        await insert_report(report, db_path)


# =============================================================================
# Commands
# =============================================================================

async def cmd_analyze(args: argparse.Namespace, config: NcgraphConfig) -> int:
    """One report per spec, in input order; all specs are built before any analysis."""
    if config.output_format != "json":
        logger.warning(f"Reports are always JSON; ignoring format {config.output_format!r}")
    groups = [build_group(text, config.max_order) for text in args.specs]

    options = config.analysis_options()
    tasks = [_in_executor(lambda g=g: analyze(g, **options)) for g in groups]
    reports = [r.to_dict() for r in await asyncio.gather(*tasks)]

    emit(dump_json(reports), args.out)
    if config.store_results:
        await _store_reports(reports, config.database_path)
    return EXIT_OK


async def cmd_import(args: argparse.Namespace, config: NcgraphConfig) -> int:
    group = load_cayley_table(args.path)
    report = (await _in_executor(lambda: analyze(group, **config.analysis_options()))).to_dict()
    emit(dump_json(report), args.out)
    if config.store_results:
        await _store_reports([report], config.database_path)
    return EXIT_OK


async def cmd_export(args: argparse.Namespace, config: NcgraphConfig) -> int:
    if bool(args.spec) == bool(args.table):
        raise ConfigError("export needs exactly one of SPEC or --table PATH")
    if args.table:
        group = load_cayley_table(args.table)
    else:
        group = _require_materialized(build_group(args.spec, config.max_order), config.max_order)

    if args.cayley:
        if args.complement:
            logger.warning("--complement has no effect on Cayley table export")
        emit(dump_cayley_table(group), args.out)
        return EXIT_OK

    graph = build_ncg(group).graph
    name = "complement" if args.complement else "ncg"
    if args.complement:
        graph = graph.complement()
    if config.output_format == "dot":
        emit(to_dot(graph, name=name, title=f"{name} of {group.spec}"), args.out)
    elif config.output_format == "csv":
        emit(to_csv(graph), args.out)
    else:
        emit(to_json(graph, name=name), args.out)
    return EXIT_OK


def format_claim_table(summary: dict) -> str:
    lines = [f"{'#':>3}  {'STATUS':<8} {'CLAIM':<40} DETAIL"]
    for claim in summary["claims"]:
        lines.append(f"{claim['number']:>3}  {claim['status']:<8} {claim['title']:<40} {claim['detail']}")
    lines.append(
        f"\n{summary['passed']} passed, {summary['failed']} failed, {summary['skipped']} skipped "
        f"(seed {summary['seed']}, max order {summary['max_order']}, {summary['sweep_size']} sweep groups)"
    )
    return "\n".join(lines)


async def cmd_verify(args: argparse.Namespace, config: NcgraphConfig) -> int:
    """Print the claim table; --out additionally writes the JSON summary."""
    summary = await run_verification(config, fixtures=args.fixture)
    sys.stdout.write(format_claim_table(summary) + "\n")
    if args.out:
        emit(dump_json(summary), args.out)
    if config.store_results:
        if await init_database(config.database_path):
            await insert_verification_run(summary, config.database_path)
    failed = any(c["status"] == FAIL for c in summary["claims"])
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


async def cmd_families(args: argparse.Namespace, config: NcgraphConfig) -> int:
    lines = [f"{'TAG':<4} {'CONSTRAINT':<32} DESCRIPTION"]
    lines += [f"{tag:<4} {constraint:<32} {description}" for tag, constraint, description in family_catalog()]
    emit("\n".join(lines), args.out)
    return EXIT_OK


async def cmd_history(args: argparse.Namespace, config: NcgraphConfig) -> int:
    if not await init_database(config.database_path):
        raise ConfigError(f"cannot open history database at {config.database_path}")
    history = {
        "reports": await get_latest_reports(spec=args.spec, limit=args.limit, db_path=config.database_path),
        "verification_runs": await get_latest_verification_runs(limit=args.limit, db_path=config.database_path),
    }
    emit(dump_json(history), args.out)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "export": cmd_export,
    "import": cmd_import,
    "families": cmd_families,
    "history": cmd_history,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)

    try:
        configure_logging(args.log_level or os.getenv("LOG_LEVEL", "WARNING"))
        config = resolve_config(args)
        return asyncio.run(COMMANDS[args.command](args, config))
    except NcgraphError as e:
        logger.debug("Command failed", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
