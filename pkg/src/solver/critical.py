#!/usr/bin/env python3
"""
TotDom Game Solver - Single-Vertex Predomination Scans
Combinatorial Games Group
"""

from typing import Dict, Optional

from src.config.settings import ResourceLimits
from src.game.variants import Player, dgame, sgame
from src.graph.core import Graph
from src.solver.minimax import solve


def values_all_single_predominations(
    graph: Graph,
    first_player: Player = Player.DOMINATOR,
    limits: Optional[ResourceLimits] = None,
) -> Dict[int, int]:
    """vertex -> value of the game on G|{vertex}"""
    ctor = dgame if first_player is Player.DOMINATOR else sgame
    return {v: solve(graph, ctor([v]), limits).value for v in range(graph.order)}


def is_critical(graph: Graph, limits: Optional[ResourceLimits] = None) -> bool:
    """True iff predominating any single vertex strictly lowers the D-game value"""
    base = solve(graph, dgame(), limits).value
    return all(value < base for value in values_all_single_predominations(graph, Player.DOMINATOR, limits).values())
