#!/usr/bin/env python3
"""
TotDom Game Solver - Shared Error Base
Combinatorial Games Group

Every error raised by the toolkit derives from ToolkitError, so the command
line can tell "our" failures apart from programming errors. Each package
declares its own narrow subclasses next to the code that raises them.
"""


class ToolkitError(Exception):
    """Base class for all toolkit errors"""

    pass


class UsageError(ToolkitError):
    """Bad command-line input (unknown profile, malformed DSL string, ...)"""

    pass
