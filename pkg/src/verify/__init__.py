#!/usr/bin/env python3
"""
TotDom Game Solver - Verification Package
Combinatorial Games Group

Executable claims about game values, grouped in suites and run as a bundle.
"""

from src.verify.claims import (
    ClaimCheck,
    ClaimReport,
    ClaimRunner,
    ClaimStatus,
    ValueCache,
)
from src.verify.suites import SUITE_REGISTRY, build_checks
from src.verify.bundle import ReportBundle, run_all

__all__ = [
    "ClaimCheck",
    "ClaimReport",
    "ClaimRunner",
    "ClaimStatus",
    "ValueCache",
    "SUITE_REGISTRY",
    "build_checks",
    "ReportBundle",
    "run_all",
]
