#!/usr/bin/env python3
"""
TotDom Game Solver - Total Domination Number
Combinatorial Games Group

Exact minimum total dominating set by branch and bound: always branch on
the undominated vertex with the fewest possible dominators (its
neighbours), bound with the best set found so far, seeded by a greedy set.
"""

import logging
from typing import List, Optional, Tuple

from src.config.settings import TOTAL_DOMINATION_MAX_ORDER
from src.graph.core import Graph, VertexSet, iter_bits
from src.solver.minimax import ResourceLimitError

logger = logging.getLogger(__name__)


class ScaleCapError(ResourceLimitError):
    """Graph too large for exhaustive total domination"""

    pass


def greedy_total_dominating_set(graph: Graph, predominated: int = 0) -> List[int]:
    """Repeatedly take the vertex dominating the most undominated vertices"""
    full = graph.full_mask
    dominated = predominated & full
    chosen: List[int] = []
    while dominated != full:
        undominated = full & ~dominated
        best = max(range(graph.order), key=lambda v: ((graph.neighbourhoods[v] & undominated).bit_count(), -v))
        chosen.append(best)
        dominated |= graph.neighbourhoods[best]
    return chosen


def minimum_total_dominating_set(
    graph: Graph, max_order: int = TOTAL_DOMINATION_MAX_ORDER, predominated: int = 0
) -> Tuple[int, VertexSet]:
    """
    Smallest T whose neighbourhoods cover every vertex outside `predominated`.
    Returns its size and one such set.
    """
    if graph.order > max_order:
        raise ScaleCapError(f"total domination is limited to {max_order} vertices, graph has {graph.order}")

    full = graph.full_mask
    nbs = graph.neighbourhoods
    max_degree = max(graph.degrees())
    # dominators[y]: vertices whose play dominates y, i.e. N(y)
    dominators = [list(iter_bits(nbs[y])) for y in range(graph.order)]

    best_set: List[int] = greedy_total_dominating_set(graph, predominated)
    best_size = len(best_set)

    def search(dominated: int, chosen: List[int]) -> None:
        nonlocal best_set, best_size
        if dominated == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = list(chosen)
            return
        undominated = full & ~dominated
        remaining = undominated.bit_count()
        # each further vertex covers at most max_degree new vertices
        if len(chosen) + -(-remaining // max_degree) >= best_size:
            return
        target = min(iter_bits(undominated), key=lambda y: len(dominators[y]))
        for t in sorted(dominators[target], key=lambda v: -(nbs[v] & undominated).bit_count()):
            chosen.append(t)
            search(dominated | nbs[t], chosen)
            chosen.pop()

    search(predominated & full, [])
    logger.debug("total domination number %d on %d vertices", best_size, graph.order)
    return best_size, VertexSet.of(best_set)


def total_domination_number(graph: Graph, max_order: Optional[int] = None, predominated: int = 0) -> int:
    return minimum_total_dominating_set(graph, max_order or TOTAL_DOMINATION_MAX_ORDER, predominated)[0]
