#!/usr/bin/env python3
"""
TotDom Game Solver - Cycle Strategies
Combinatorial Games Group

Two explicit strategies for games on cycles.

S1 (Staller): play next to the end of a run or anti-run so that exactly one
new vertex gets dominated. That is impossible only when the dominated set is
one side of the bipartition; then she concedes a two-vertex move.

D1 (Dominator): after Staller plays v1 and newly dominates v2, label the
cycle v1, v2, v3, ... in that direction. If v4 is still undominated he plays
v5, which makes v1, v3, v5 unplayable together with her move. Otherwise he
plays anywhere.

Both only look at neighbourhoods, so any labelling of the cycle works.
"""

from typing import NamedTuple, Optional, Union

import networkx as nx

from src.game.engine import NoMovesError
from src.graph.core import Graph, VertexSet, iter_bits
from src.utils.errors import ToolkitError

MaskLike = Union[int, VertexSet]


class PolicyNotApplicableError(ToolkitError):
    """Strategy used outside the situation it is defined for"""

    pass


class PolicyChoice(NamedTuple):
    vertex: int
    concession: bool


def _mask(value: MaskLike) -> int:
    return value.mask if isinstance(value, VertexSet) else value


def is_cycle(graph: Graph) -> bool:
    return graph.order >= 3 and all(d == 2 for d in graph.degrees()) and nx.is_connected(graph.to_networkx())


def require_cycle(graph: Graph) -> None:
    if not is_cycle(graph):
        raise PolicyNotApplicableError("cycle strategies need a cycle graph")


def _lowest_legal(graph: Graph, dominated: int) -> int:
    undominated = graph.full_mask & ~dominated
    for x, nb in enumerate(graph.neighbourhoods):
        if nb & undominated:
            return x
    raise NoMovesError("every vertex is dominated")


def s1_move(cycle: Graph, dominated: MaskLike) -> PolicyChoice:
    require_cycle(cycle)
    dominated = _mask(dominated)
    if dominated == 0 or dominated == cycle.full_mask:
        raise PolicyNotApplicableError("S1 needs a dominated set that is neither empty nor everything")
    undominated = cycle.full_mask & ~dominated
    for x, nb in enumerate(cycle.neighbourhoods):
        if (nb & undominated).bit_count() == 1:
            return PolicyChoice(x, False)
    # bipartition: every legal move dominates both neighbours
    return PolicyChoice(_lowest_legal(cycle, dominated), True)


def _step(cycle: Graph, current: int, previous: int) -> int:
    """The neighbour of `current` that is not `previous`"""
    return next(v for v in iter_bits(cycle.neighbourhoods[current]) if v != previous)


def d1_move(
    cycle: Graph,
    dominated: MaskLike,
    last_staller_move: int,
    before: Optional[MaskLike] = None,
) -> int:
    """
    Dominator's reply to Staller's move on last_staller_move. `before` is the
    dominated set before her move; without it both directions are tried.
    """
    require_cycle(cycle)
    dominated = _mask(dominated)
    if dominated == cycle.full_mask:
        raise NoMovesError("every vertex is dominated")
    v1 = cycle.vertex(last_staller_move)
    newly = None if before is None else dominated & ~_mask(before)

    for v2 in iter_bits(cycle.neighbourhoods[v1]):
        if newly is not None and not newly >> v2 & 1:
            continue
        v3 = _step(cycle, v2, v1)
        v4 = _step(cycle, v3, v2)
        v5 = _step(cycle, v4, v3)
        if not dominated >> v4 & 1:
            return v5
    return _lowest_legal(cycle, dominated)
