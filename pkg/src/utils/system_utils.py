#!/usr/bin/env python3
"""
TotDom Game Solver - System Utilities
Combinatorial Games Group

Host information for the --check / --system-info modes (CPU count, free
memory, process size) and a directory helper for the sweep journal.
"""

import os
import platform
import sys
from pathlib import Path
from typing import Dict, Optional

import psutil


class SystemInfo:
    """System information and utilities"""

    def __init__(self):
        self.os_type = platform.system()
        self.os_release = platform.release()
        self.architecture = platform.architecture()[0]
        self.machine = platform.machine()
        self.python_version = platform.python_version()

    def cpu_count(self) -> int:
        # physical cores can be None on some VMs, fall back to logical
        count = psutil.cpu_count(logical=False) or psutil.cpu_count(logical=True) or os.cpu_count()
        return count or 1

    def memory(self) -> Dict[str, int]:
        """Total and available memory in bytes"""
        try:
            vm = psutil.virtual_memory()
            return {"total": vm.total, "available": vm.available}
        except Exception:
            return {"total": 0, "available": 0}

    def process_rss(self) -> int:
        """Resident memory of this process in bytes"""
        try:
            return psutil.Process(os.getpid()).memory_info().rss
        except Exception:
            return 0

    def python_ok(self) -> bool:
        # int.bit_count is used throughout
        return sys.version_info >= (3, 10)

    def get_system_summary(self) -> str:
        return f"{self.os_type} {self.os_release} ({self.architecture}, {self.machine})"


class PathManager:
    """Path and file system utilities"""

    @staticmethod
    def ensure_directory(path: Path) -> bool:
        """Ensure directory exists, create if needed"""
        try:
            path.mkdir(parents=True, exist_ok=True)
            return True
        except OSError:
            return False


# Global instances
system_info = SystemInfo()


def format_bytes(count: Optional[int]) -> str:
    if not count:
        return "unknown"
    value = float(count)
    for unit in ("B", "KiB", "MiB", "GiB"):
        if value < 1024 or unit == "GiB":
            return f"{value:.1f} {unit}"
        value /= 1024
    return f"{value:.1f} GiB"
