#!/usr/bin/env python3
"""
TotDom Game Solver - Utilities Package
Combinatorial Games Group

System information, logging setup, the sweep journal and the shared error base.
"""

from src.utils.errors import ToolkitError, UsageError
from src.utils.system_utils import (
    SystemInfo,
    PathManager,
    system_info,
    format_bytes,
)

__version__ = "1.0.0"
__author__ = "Combinatorial Games Group"
__description__ = "System utilities for the total domination game solver"

# Expose main utility classes and functions
__all__ = [
    "ToolkitError",
    "UsageError",
    "SystemInfo",
    "PathManager",
    "system_info",
    "format_bytes",
]
