#!/usr/bin/env python3
"""
TotDom Game Solver - Solver Package
Combinatorial Games Group

Exact game values, the brute-force oracle and total domination numbers.
"""

from src.solver.minimax import (
    GameSolver,
    SolveResult,
    SearchStats,
    TranspositionTable,
    ResourceLimitError,
    solve,
    best_line,
    counted_moves,
)
from src.solver.oracle import OracleCapError, oracle_solve
from src.solver.domination import (
    ScaleCapError,
    greedy_total_dominating_set,
    minimum_total_dominating_set,
    total_domination_number,
)
from src.solver.critical import values_all_single_predominations, is_critical

__all__ = [
    "GameSolver",
    "SolveResult",
    "SearchStats",
    "TranspositionTable",
    "ResourceLimitError",
    "solve",
    "best_line",
    "counted_moves",
    "OracleCapError",
    "oracle_solve",
    "ScaleCapError",
    "greedy_total_dominating_set",
    "minimum_total_dominating_set",
    "total_domination_number",
    "values_all_single_predominations",
    "is_critical",
]
