#!/usr/bin/env python3
"""
TotDom Game Solver - Main Application Entry Point
Combinatorial Games Group

Command-line interface: solve, family, match, verify and sweep subcommands,
plus the --check and --system-info modes. Results go to standard output,
diagnostics to standard error.

Exit codes: 0 ok, 1 claim failure, 2 usage error, 3 resource cap hit.
"""

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from src.config import (
    APP_NAME,
    DEBUG_MODE,
    EXIT_CLAIM_FAILURE,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    LOGS_DIR,
    OUTPUT_FORMATS,
    PROFILES,
    USER_CONFIG_FILE,
    VERSION,
    resolve_limits,
    resolve_verify_defaults,
)
from src.game.variants import parse_variant
from src.graph.core import remove_vertex
from src.graph.io import parse_family, serialize_graph
from src.solver.minimax import GameSolver, ResourceLimitError
from src.strategies.match import Policy, PolicyFaultError, play_match
from src.utils.errors import ToolkitError
from src.utils.logging_setup import setup_logging
from src.utils.sweep import build_tasks, render_rows, run_sweep
from src.utils.system_utils import format_bytes, system_info
from src.verify.bundle import run_all
from src.verify.suites import SUITE_REGISTRY

logger = logging.getLogger(__name__)


def check_dependencies() -> tuple[bool, list[str]]:
    """
    Check if all required dependencies are available

    Returns:
        tuple: (dependencies_met, missing_list)
    """
    required_modules = [
        "psutil",  # memory-derived caps, system info
        "colorlog",  # console logging
        "networkx",  # random graphs, connectivity
        "configparser",  # INI overrides
    ]

    missing: list[str] = []
    for module in required_modules:
        try:
            __import__(module)
        except ImportError:
            missing.append(module)

    return len(missing) == 0, missing


def print_system_info(config_file: Optional[Path] = None):
    """Print system information for debugging"""
    memory = system_info.memory()
    limits = resolve_limits(config_file=config_file)
    print(f"System: {system_info.get_system_summary()}")
    print(f"Python: {sys.version.split()[0]}")
    print(f"CPUs: {system_info.cpu_count()}")
    print(f"Memory: {format_bytes(memory['available'])} available of {format_bytes(memory['total'])}")
    print(f"Solver caps: {limits.max_nodes} nodes, {limits.max_table} table entries, {limits.threads} thread(s)")


def create_argument_parser() -> argparse.ArgumentParser:
    """Create command line argument parser"""
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Exact solver and claim verifier for the total domination game",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s solve --graph gndm:n=14,d=4,m=4 --variant d --format json
  %(prog)s solve --graph cycle:n=8 --variant "d|S=u1,u5"
  %(prog)s match --graph cycle:n=14 --dominator d1 --staller optimal
  %(prog)s verify --profile quick
  %(prog)s sweep --family gndm --grid "n=8|14,d=1..n/2,m=4" --variant d --journal sweep.jsonl
  %(prog)s --check
        """,
    )

    parser.add_argument("--version", action="version", version=f"{APP_NAME} v{VERSION}")
    parser.add_argument("--check", action="store_true", help="Check system requirements and exit")
    parser.add_argument("--system-info", action="store_true", help="Display system information and exit")
    parser.add_argument("--debug", action="store_true", help="Enable debug mode with verbose logging")
    parser.add_argument("--log-level", default=None, help="Logging level (DEBUG, INFO, WARNING, ...)")
    parser.add_argument("--log-file", action="store_true", help=f"Also log to {LOGS_DIR / 'totdom.log'}")
    parser.add_argument("--config", type=Path, default=None, help=f"INI file (default {USER_CONFIG_FILE})")

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-nodes", type=int, default=None, help="Node budget per solve")
    caps.add_argument("--max-table", type=int, default=None, help="Transposition table budget (entries)")
    caps.add_argument("--threads", type=int, default=None, help="Worker threads (processes for sweep)")
    caps.add_argument("--format", choices=OUTPUT_FORMATS, default="json", help="Output format")
    caps.add_argument("--no-timing", action="store_true", help="Leave timings out for reproducible output")

    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("solve", parents=[caps], help="Exact value of one game")
    p.add_argument("--graph", required=True, help="Family DSL (cycle:n=8, gndm:n=14,d=4,m=4, ...) or file:<path>")
    p.add_argument("--variant", default="d", help="Variant DSL (d, s, d|S=u1,u5, sdp:k=1,l=3, ...)")
    p.add_argument("--remove", default=None, help="Delete this vertex before solving")
    p.add_argument("--prune", action="store_true", help="Alpha-beta bounds in the plain phase")
    p.add_argument("--line", action="store_true", help="Include one optimal line of play")

    p = sub.add_parser("family", parents=[caps], help="Print a generated graph")
    p.add_argument("--graph", required=True, help="Family DSL or file:<path>")
    p.add_argument("--remove", default=None, help="Delete this vertex first")

    p = sub.add_parser("match", parents=[caps], help="Play two policies against each other")
    p.add_argument("--graph", required=True, help="Family DSL or file:<path>")
    p.add_argument("--variant", default="d", help="Variant DSL")
    p.add_argument("--dominator", default="optimal", help="optimal, d1 or first-legal")
    p.add_argument("--staller", default="optimal", help="optimal, s1 or first-legal")

    p = sub.add_parser("verify", parents=[caps], help="Run the claim suites")
    p.add_argument("--profile", default=None, help=f"One of {', '.join(PROFILES)}")
    p.add_argument("--seed", type=int, default=None, help="Seed for random graphs and sampled vertices")
    p.add_argument("--suite", action="append", default=[], help=f"Only these suites ({', '.join(SUITE_REGISTRY)})")

    p = sub.add_parser("sweep", parents=[caps], help="Solve over a parameter grid")
    p.add_argument("--family", required=True, help="Family name (gndm, cycle, zk, ...)")
    p.add_argument("--grid", required=True, help='Parameter grid, e.g. "n=8|14,d=1..n/2,m=4"')
    p.add_argument("--variant", action="append", default=[], help="Variant DSL (repeatable, default d)")
    p.add_argument("--journal", type=Path, default=None, help="Append-only journal for resuming")

    return parser


def handle_check_mode(config_file: Optional[Path] = None) -> int:
    """Handle system requirements check mode"""
    print(f"Checking system requirements for {APP_NAME} v{VERSION}...")
    print()
    print_system_info(config_file)
    print()

    python_ok = system_info.python_ok()
    print(f"Python 3.10+: {'PASSED' if python_ok else 'FAILED'}")

    dep_ok, missing_deps = check_dependencies()
    if dep_ok:
        print("Dependencies: PASSED")
    else:
        print("Dependencies: FAILED")
        print("   Missing modules:")
        for dep in missing_deps:
            print(f"   • {dep}")
        print("\n   Install missing dependencies:")
        print("   pip install -r requirements.txt")
    print()

    if python_ok and dep_ok:
        print(f"System is ready to run {APP_NAME}")
        return EXIT_OK
    print("System is not ready. Please fix the issues above.")
    return EXIT_CLAIM_FAILURE


def handle_system_info_mode(config_file: Optional[Path] = None) -> int:
    """Handle system information display mode"""
    print(f"{APP_NAME} v{VERSION} - System information")
    print("=" * 60)
    print_system_info(config_file)
    print(f"Process memory: {format_bytes(system_info.process_rss())}")

    from src.config.settings import APP_DIR

    print("\nApplication paths:")
    print(f"   App Directory: {APP_DIR}")
    print(f"   Logs Directory: {LOGS_DIR}")
    print(f"   Config File: {config_file or USER_CONFIG_FILE}")
    return EXIT_OK


# ---- subcommands -------------------------------------------------------------


def _limits(args):
    return resolve_limits(args.max_nodes, args.max_table, args.threads, args.config)


def _load_graph(args):
    graph = parse_family(args.graph)
    if getattr(args, "remove", None):
        graph = remove_vertex(graph, args.remove)
    return graph


def _csv(header: List[str], rows: List[List[object]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _blank(value: object) -> object:
    return "" if value is None else value


def cmd_solve(args) -> int:
    graph = _load_graph(args)
    variant = parse_variant(args.variant, graph)
    solver = GameSolver(graph, variant, _limits(args), prune=args.prune)
    result = solver.solve()
    timing = not args.no_timing

    data = result.to_dict(timing)
    data["graph"] = args.graph
    data["variant"] = variant.name
    if args.line:
        data["line"] = [entry.to_dict() for entry in solver.best_line()]

    if args.format == "json":
        sys.stdout.write(json.dumps(data, ensure_ascii=False) + "\n")
    elif args.format == "csv":
        moves = " ".join(str(a) for a in result.first_moves)
        sys.stdout.write(
            _csv(
                ["graph", "variant", "value", "first_moves", "nodes", "table_entries", "millis"],
                [[args.graph, variant.name, result.value, moves, _blank(data["nodes"]), _blank(data["table_entries"]), _blank(data["millis"])]],
            )
        )
    else:
        moves = ", ".join(graph.name_of(a) if isinstance(a, int) else a for a in result.first_moves)
        sys.stdout.write(f"{variant.name} on {args.graph}: {result.value}\n")
        sys.stdout.write(f"optimal first moves: {moves or '-'}\n")
        if timing:
            sys.stdout.write(f"{result.nodes} nodes, {result.table_entries} table entries\n")
    return EXIT_OK


def cmd_family(args) -> int:
    graph = _load_graph(args)
    if args.format == "json":
        data = {"order": graph.order, "edges": [list(e) for e in graph.edges()], "landmarks": dict(sorted(graph.landmarks.items()))}
        sys.stdout.write(json.dumps(data) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_csv(["a", "b"], [list(e) for e in graph.edges()]))
    else:
        sys.stdout.write(serialize_graph(graph))
    return EXIT_OK


def cmd_match(args) -> int:
    graph = _load_graph(args)
    variant = parse_variant(args.variant, graph)
    result = play_match(graph, variant, Policy.parse(args.dominator), Policy.parse(args.staller), _limits(args))
    if args.format == "json":
        sys.stdout.write(json.dumps(result.to_dict(), ensure_ascii=False) + "\n")
    elif args.format == "csv":
        rows = [[e.player, e.action, " ".join(map(str, e.newly_dominated))] for e in result.transcript]
        sys.stdout.write(_csv(["player", "action", "newly_dominated"], rows))
    else:
        for e in result.transcript:
            action = graph.name_of(e.action) if isinstance(e.action, int) else e.action
            sys.stdout.write(f"{e.player:<10} {action}\n")
        sys.stdout.write(f"length {result.length}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    defaults = resolve_verify_defaults(args.config)
    profile = args.profile or defaults["profile"]
    seed = args.seed if args.seed is not None else defaults["seed"]
    limits = _limits(args)
    bundle = run_all(profile, seed, limits.threads, timing=not args.no_timing, limits=limits, suites=args.suite)
    sys.stdout.write(bundle.render(args.format))
    return EXIT_OK if bundle.ok else EXIT_CLAIM_FAILURE


def cmd_sweep(args) -> int:
    tasks = build_tasks(args.family, args.grid, args.variant or ["d"])
    limits = _limits(args)
    rows = run_sweep(tasks, limits, args.journal, workers=limits.threads)
    sys.stdout.write(render_rows(rows, args.format, timing=not args.no_timing))
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "family": cmd_family,
    "match": cmd_match,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point"""
    parser = create_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad flags and 0 for --help/--version
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    debug = args.debug or DEBUG_MODE
    if args.debug:
        os.environ["TOTDOM_DEBUG"] = "true"
    level = "DEBUG" if debug else (args.log_level or "WARNING").upper()
    try:
        setup_logging(level, LOGS_DIR / "totdom.log" if args.log_file else None)
    except (ValueError, TypeError):
        print(f"Unknown log level {args.log_level!r}", file=sys.stderr)
        return EXIT_USAGE

    if args.system_info:
        return handle_system_info_mode(args.config)
    if args.check:
        return handle_check_mode(args.config)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as e:
        logger.error("resource cap reached: %s", e)
        return EXIT_RESOURCE
    except PolicyFaultError as e:
        logger.error("%s", e)
        return EXIT_CLAIM_FAILURE
    except ToolkitError as e:
        # bad graph, variant, policy or flag values
        logger.error("%s", e)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return EXIT_OK

    except Exception as e:
        logger.error("Unexpected error: %s", e)
        if debug:
            import traceback

            traceback.print_exc()
        return EXIT_CLAIM_FAILURE


if __name__ == "__main__":
    exit_code = main()
    sys.exit(exit_code)
