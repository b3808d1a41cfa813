#!/usr/bin/env python3
"""
TotDom Game Solver - Logging Setup
Combinatorial Games Group

Console logging through colorlog (standard error only, standard output is
kept for machine-readable results) plus an optional rotating log file.
"""

import logging
import logging.handlers
from pathlib import Path
from typing import Optional, Union

import colorlog

from src.config.settings import LOG_FORMAT, LOG_LEVEL, MAX_LOG_SIZE_MB, LOG_BACKUP_COUNT

CONSOLE_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"

LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "bold_red",
}

_HANDLER_TAG = "_totdom_handler"


def setup_logging(
    level: Union[str, int] = LOG_LEVEL, log_file: Optional[Path] = None
) -> logging.Logger:
    """Configure the root logger; calling again replaces the handlers it added before"""
    root = logging.getLogger()
    root.setLevel(level)

    # Drop handlers from an earlier call so repeated CLI invocations in one
    # process (tests) don't stack duplicate output
    for handler in list(root.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            root.removeHandler(handler)

    console = colorlog.StreamHandler()
    console.setFormatter(colorlog.ColoredFormatter(CONSOLE_FORMAT, log_colors=LOG_COLORS))
    setattr(console, _HANDLER_TAG, True)
    root.addHandler(console)

    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=MAX_LOG_SIZE_MB * 1024 * 1024,
            backupCount=LOG_BACKUP_COUNT,
            encoding="utf-8",
        )
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        setattr(file_handler, _HANDLER_TAG, True)
        root.addHandler(file_handler)

    return root
