#!/usr/bin/env python3
"""
TotDom Game Solver - Strategies Package
Combinatorial Games Group

Explicit cycle strategies and the match harness.
"""

from src.strategies.cycle import (
    PolicyChoice,
    PolicyNotApplicableError,
    is_cycle,
    s1_move,
    d1_move,
)
from src.strategies.match import MatchResult, Policy, PolicyFaultError, play_match

__all__ = [
    "PolicyChoice",
    "PolicyNotApplicableError",
    "is_cycle",
    "s1_move",
    "d1_move",
    "MatchResult",
    "Policy",
    "PolicyFaultError",
    "play_match",
]
