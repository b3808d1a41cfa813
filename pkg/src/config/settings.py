#!/usr/bin/env python3
"""
TotDom Game Solver - Configuration Settings
Combinatorial Games Group

All the configuration constants for the solver: resource caps, verification
profiles, logging and file paths. Values can be overridden from the
environment (TOTDOM_*) or from an optional INI file, see load_user_settings().

Change history:
 - memory-derived default table cap via psutil
 - "smoke" profile for CI runs
"""

import configparser
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Dict, Optional, Any

import psutil

# Application Information
APP_NAME = "totdom"
VERSION = "1.0.0"
DEVELOPER = "Combinatorial Games Group"

# Solver Limits
# Roughly 150 bytes per table entry once the dict overhead is counted
TABLE_ENTRY_BYTES = 150
HARD_MAX_TABLE = 60_000_000
DEFAULT_MAX_NODES = 400_000_000
ORACLE_MAX_ORDER = 12
TOTAL_DOMINATION_MAX_ORDER = 32


def _memory_table_cap() -> int:
    try:
        available = psutil.virtual_memory().available
    except Exception:
        return 5_000_000
    # keep half of the free memory for everything else
    return max(100_000, min(HARD_MAX_TABLE, available // (2 * TABLE_ENTRY_BYTES)))


DEFAULT_MAX_TABLE = _memory_table_cap()
DEFAULT_THREADS = 1

# Verification
DEFAULT_SEED = 20240611
RANDOM_GRAPH_COUNT = 100
PROPERTY_GRAPH_ORDERS = (4, 5, 6, 7, 8)

PROFILES: Dict[str, Dict[str, Any]] = {
    "smoke": {
        "cycles": [8],
        "lemma_cycles": [8],
        "double_staller_orders": list(range(3, 9)),
        "gnm": [(8, 4)],
        "hm": [4, 5],
        "tilde": [(8, 3)],
        "two_predominated": [8],
        "sandwich": [("cycle", 8, 4, 4)],
        "attachment": [(8, 4)],
        "random_graphs": 10,
        "path_orders": list(range(3, 11)),
        "zk_max": 0,
    },
    "quick": {
        "cycles": [8, 14],
        "lemma_cycles": [8, 14],
        "double_staller_orders": list(range(3, 15)),
        "gnm": [(8, 4), (14, 4)],
        "hm": [4, 5, 6],
        "tilde": [(8, 3), (14, 3), (8, 4)],
        "two_predominated": [8, 14],
        "sandwich": [("cycle", 8, 4, 4), ("cycle", 8, 2, 4), ("path", 6, 5, 3)],
        "attachment": [(8, 4), (14, 4)],
        "random_graphs": RANDOM_GRAPH_COUNT,
        "path_orders": list(range(3, 15)),
        "zk_max": 1,
    },
    "full": {
        "cycles": [8, 14, 20],
        "lemma_cycles": [8, 14],
        "double_staller_orders": list(range(3, 15)),
        "gnm": [(8, 4), (14, 4), (20, 4)],
        "hm": [4, 5, 6],
        "tilde": [(8, 3), (14, 3), (8, 4)],
        "two_predominated": [8, 14],
        "sandwich": [("cycle", 8, 4, 4), ("cycle", 8, 2, 4), ("path", 6, 5, 3)],
        "attachment": [(8, 4), (14, 4), (20, 4)],
        "random_graphs": RANDOM_GRAPH_COUNT,
        "path_orders": list(range(3, 15)),
        "zk_max": 2,
    },
}
DEFAULT_PROFILE = "quick"
# Orders the attachment sweep was originally reported for
REPORTED_ATTACHMENT_ORDERS = (8, 14, 20, 26, 32)

# File Paths
APP_DIR = Path(__file__).parent.parent.parent
LOGS_DIR = APP_DIR / "logs"
USER_CONFIG_FILE = Path.home() / ".config" / "totdom" / "settings.ini"

# Logging Configuration
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"
LOG_LEVEL = "INFO"
MAX_LOG_SIZE_MB = 5
LOG_BACKUP_COUNT = 3

# Output
OUTPUT_FORMATS = ["json", "csv", "text"]

# Exit Codes
EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# Development/Debug Settings
DEBUG_MODE = os.getenv("TOTDOM_DEBUG", "false").lower() == "true"


@dataclass(frozen=True)
class ResourceLimits:
    """Caps handed to the solver; exceeding one is an error, never an approximation"""

    max_nodes: int = DEFAULT_MAX_NODES
    max_table: int = DEFAULT_MAX_TABLE
    threads: int = DEFAULT_THREADS


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def load_user_settings(config_file: Optional[Path] = None) -> Dict[str, Dict[str, str]]:
    """Read the optional INI file; missing or broken files give an empty dict"""
    path = config_file or USER_CONFIG_FILE
    parser = configparser.ConfigParser()
    try:
        if not parser.read(path, encoding="utf-8"):
            return {}
    except configparser.Error:
        return {}
    return {section: dict(parser.items(section)) for section in parser.sections()}


def resolve_limits(
    max_nodes: Optional[int] = None,
    max_table: Optional[int] = None,
    threads: Optional[int] = None,
    config_file: Optional[Path] = None,
) -> ResourceLimits:
    """
    Build ResourceLimits with precedence: explicit argument > environment
    (TOTDOM_MAX_NODES, TOTDOM_MAX_TABLE, TOTDOM_THREADS) > INI [solver] > default
    """
    solver_section = load_user_settings(config_file).get("solver", {})

    def pick(explicit: Optional[int], env_name: str, ini_key: str, default: int) -> int:
        if explicit is not None:
            return explicit
        env_value = _env_int(env_name)
        if env_value is not None:
            return env_value
        if ini_key in solver_section:
            try:
                return int(solver_section[ini_key])
            except ValueError:
                pass
        return default

    limits = ResourceLimits()
    return replace(
        limits,
        max_nodes=pick(max_nodes, "TOTDOM_MAX_NODES", "max_nodes", limits.max_nodes),
        max_table=pick(max_table, "TOTDOM_MAX_TABLE", "max_table", limits.max_table),
        threads=max(1, pick(threads, "TOTDOM_THREADS", "threads", limits.threads)),
    )


def resolve_verify_defaults(config_file: Optional[Path] = None) -> Dict[str, Any]:
    """Seed and profile for the verify command, INI [verify] over built-ins"""
    verify_section = load_user_settings(config_file).get("verify", {})
    seed = DEFAULT_SEED
    try:
        seed = int(verify_section.get("seed", DEFAULT_SEED))
    except ValueError:
        pass
    return {"seed": seed, "profile": verify_section.get("profile", DEFAULT_PROFILE)}
