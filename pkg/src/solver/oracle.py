#!/usr/bin/env python3
"""
TotDom Game Solver - Brute-Force Oracle
Combinatorial Games Group

Memo-free recursion straight over the game engine, used to certify the
memoised solver on small graphs. Shares no code with the solver beyond the
rules themselves.
"""

from src.config.settings import ORACLE_MAX_ORDER
from src.game.engine import Game, GameState
from src.game.variants import PASS, Player, VariantSpec
from src.graph.core import Graph
from src.solver.minimax import ResourceLimitError


class OracleCapError(ResourceLimitError):
    """Graph too large for the brute-force oracle"""

    pass


def _play_out(game: Game, state: GameState) -> int:
    if state.to_move is None:
        return 0
    # identical successor states are searched once
    children = {}
    for action, tr in game.successors(state):
        children[(0 if action == PASS else 1, tr.state)] = None
    values = [inc + _play_out(game, child) for inc, child in children]
    return min(values) if state.to_move is Player.DOMINATOR else max(values)


def oracle_solve(graph: Graph, variant: VariantSpec, max_order: int = ORACLE_MAX_ORDER) -> int:
    if graph.order > max_order:
        raise OracleCapError(f"oracle is limited to {max_order} vertices, graph has {graph.order}")
    game = Game(graph, variant)
    return _play_out(game, game.initial_state())
