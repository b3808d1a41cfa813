#!/usr/bin/env python3
"""
TotDom Game Solver - Sweep Journal

Append-only JSON-lines file of completed sweep rows, so an interrupted
sweep picks up where it stopped. One line per row, keyed by the row's
instance key. A torn last line (killed mid-write) is ignored on load.

Notes:
- rows are flushed one at a time; appends from worker threads go through one lock
"""

from __future__ import annotations

import json
import logging
import threading
from pathlib import Path
from typing import Any, Dict, Optional

from src.utils.system_utils import PathManager

logger = logging.getLogger(__name__)


class Journal:
    def __init__(self, path: Optional[Path]):
        self.path = Path(path) if path is not None else None
        self._lock = threading.Lock()

    @property
    def enabled(self) -> bool:
        return self.path is not None

    def load(self) -> Dict[str, Dict[str, Any]]:
        """Completed rows by key; missing file means nothing done yet"""
        done: Dict[str, Dict[str, Any]] = {}
        if self.path is None or not self.path.exists():
            return done
        try:
            lines = self.path.read_text(encoding="utf-8").splitlines()
        except OSError as e:
            logger.warning("could not read journal %s: %s", self.path, e)
            return done
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                logger.warning("skipping unreadable journal line %d in %s", lineno, self.path)
                continue
            if isinstance(record, dict) and "key" in record and "row" in record:
                done[record["key"]] = record["row"]
        return done

    def append(self, key: str, row: Dict[str, Any]) -> bool:
        """Record one finished row. Returns False if the write failed."""
        if self.path is None:
            return True
        payload = json.dumps({"key": key, "row": row}, ensure_ascii=False, sort_keys=True)
        with self._lock:
            try:
                PathManager.ensure_directory(self.path.parent)
                # start on a fresh line after a torn write
                if not self._ends_with_newline():
                    payload = "\n" + payload
                with open(self.path, "a", encoding="utf-8") as f:
                    f.write(payload + "\n")
                    f.flush()
                return True
            except OSError as e:
                logger.error("could not append to journal %s: %s", self.path, e)
                return False

    def _ends_with_newline(self) -> bool:
        if not self.path.exists() or self.path.stat().st_size == 0:
            return True
        with open(self.path, "rb") as f:
            f.seek(-1, 2)
            return f.read(1) == b"\n"

    def remove(self) -> bool:
        """Delete the journal. True if it is gone afterwards."""
        if self.path is None:
            return True
        try:
            if self.path.exists():
                self.path.unlink()
            return True
        except OSError:
            return False
