#!/usr/bin/env python3
"""
TotDom Game Solver - Exact Minimax Solver
Combinatorial Games Group

Memoised minimax over game states. The value of a state is the number of
counted moves still to come under optimal play (Dominator minimises,
Staller maximises), so a child reached by a move adds 1 and a child reached
by a pass adds 0.

Search runs in two phases:
  * general phase: any variant feature (pass budget, pending event or forced
    pass, live trigger, unfinished opening order) is still relevant. States
    are keyed on the full tuple; moves_played is part of the key only while
    something is still scheduled by move index.
  * plain phase: nothing but alternation is left. States collapse to
    (dominated, side to move) packed into one int, and moves that produce
    the same dominated set are merged.

With prune=True the plain phase runs fail-soft alpha-beta over a table of
(lower, upper) bounds. Both modes give the same values.
"""

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple

from src.config.settings import ResourceLimits
from src.game.engine import Action, Game, GameState, TranscriptEntry, Transition
from src.game.variants import PASS, Player, VariantSpec
from src.graph.core import Graph, VertexSet, iter_bits
from src.utils.errors import ToolkitError

logger = logging.getLogger(__name__)

INF = 1 << 30


@dataclass
class SearchStats:
    nodes: int = 0
    table_entries: int = 0
    millis: float = 0.0


class ResourceLimitError(ToolkitError):
    """Node or table budget exhausted; carries the statistics gathered so far"""

    def __init__(self, message: str, stats: Optional[SearchStats] = None):
        super().__init__(message)
        self.stats = stats or SearchStats()


@dataclass
class SolveResult:
    value: int
    first_moves: Tuple[Action, ...]
    nodes: int
    table_entries: int
    millis: float
    variant: str = ""

    @property
    def optimal_first_moves(self) -> VertexSet:
        return VertexSet.of(a for a in self.first_moves if a != PASS)

    @property
    def pass_optimal(self) -> bool:
        return PASS in self.first_moves

    def to_dict(self, timing: bool = True) -> Dict[str, object]:
        # field order is part of the output format; search effort depends on
        # the thread count, so it goes out with the timings
        return {
            "value": self.value,
            "first_moves": list(self.first_moves),
            "nodes": self.nodes if timing else None,
            "table_entries": self.table_entries if timing else None,
            "millis": round(self.millis, 3) if timing else None,
        }


class TranspositionTable:
    """
    Shared state -> value map. Plain-phase keys are ints, general-phase keys
    are tuples, so both live in one dict. Exact values are written with
    insert-if-absent; bound pairs are overwritten (each pair is valid on its own).
    """

    __slots__ = ("entries",)

    def __init__(self):
        self.entries: Dict[Hashable, object] = {}

    def lookup(self, key: Hashable):
        return self.entries.get(key)

    def store(self, key: Hashable, value: int) -> int:
        return self.entries.setdefault(key, value)

    def store_bounds(self, key: Hashable, lo: int, hi: int) -> None:
        self.entries[key] = (lo, hi)

    def clear(self) -> None:
        self.entries.clear()

    def __len__(self) -> int:
        return len(self.entries)


class GameSolver:
    """Solver for one graph and variant; keeps its table between calls"""

    def __init__(
        self,
        graph: Graph,
        variant: VariantSpec,
        limits: Optional[ResourceLimits] = None,
        prune: bool = False,
        table: Optional[TranspositionTable] = None,
    ):
        self.game = Game(graph, variant)
        self.graph = graph
        self.variant = variant
        self.limits = limits or ResourceLimits()
        self.prune = prune
        self.table = table if table is not None else TranspositionTable()
        self.full = graph.full_mask
        # twins have the same neighbourhood, one copy is enough
        self._masks = tuple(sorted(set(graph.neighbourhoods)))
        self._prefix_tail = max(0, len(variant.schedule_prefix) - 1)
        self._counter = itertools.count(1)
        self._started = time.perf_counter()

    # ---- bookkeeping ---------------------------------------------------

    def _stats(self) -> SearchStats:
        nodes = next(self._counter) - 1
        self._counter = itertools.count(nodes + 1)
        return SearchStats(
            nodes=nodes,
            table_entries=len(self.table),
            millis=(time.perf_counter() - self._started) * 1000.0,
        )

    def _tick(self) -> None:
        n = next(self._counter)
        if n > self.limits.max_nodes:
            raise ResourceLimitError(f"node budget of {self.limits.max_nodes} exceeded", self._stats())
        if len(self.table.entries) > self.limits.max_table:
            raise ResourceLimitError(f"table budget of {self.limits.max_table} entries exceeded", self._stats())

    # ---- keys ------------------------------------------------------------

    def _triggers_live(self, state: GameState) -> bool:
        game = self.game
        if not game.trigger_mask or state.triggers_fired >= 2:
            return False
        if self.variant.first_move_exemption and state.triggers_fired == 0:
            return True
        return bool(game.trigger_cover & ~state.dominated)

    def _schedule_pending(self, state: GameState) -> bool:
        return (
            state.events_applied < len(self.game.events)
            or state.forced_applied < len(self.game.forced)
            or state.moves_played < self._prefix_tail
        )

    def is_plain_state(self, state: GameState) -> bool:
        return (
            not any(state.passes_remaining)
            and not self._schedule_pending(state)
            and not self._triggers_live(state)
        )

    def transposition_key(self, state: GameState) -> Hashable:
        if self.is_plain_state(state):
            return state.dominated << 1 | int(state.to_move)
        return (
            state.dominated,
            int(state.to_move),
            state.passes_remaining,
            state.triggers_fired,
            state.moves_played if self._schedule_pending(state) else -1,
        )

    # ---- plain phase -----------------------------------------------------

    def _plain(self, dominated: int, staller: int) -> int:
        if dominated == self.full:
            return 0
        entries = self.table.entries
        key = dominated << 1 | staller
        value = entries.get(key)
        if value is not None:
            return value
        self._tick()

        undominated = self.full & ~dominated
        children = {dominated | nb for nb in self._masks if nb & undominated}
        if staller:
            best = -1
            for child in children:
                v = self._plain(child, 0)
                if v > best:
                    best = v
        else:
            best = INF
            for child in children:
                v = self._plain(child, 1)
                if v < best:
                    best = v
                    if best == 0:
                        break
        return entries.setdefault(key, best + 1)

    def _plain_bounded(self, dominated: int, staller: int, alpha: int, beta: int) -> int:
        if dominated == self.full:
            return 0
        entries = self.table.entries
        key = dominated << 1 | staller
        entry = entries.get(key)
        if entry is None:
            lo, hi = 1, (self.full & ~dominated).bit_count()
        else:
            lo, hi = entry
        if lo == hi or lo >= beta:
            return lo
        if hi <= alpha:
            return hi
        a0, b0 = max(alpha, lo), min(beta, hi)
        self._tick()

        undominated = self.full & ~dominated
        children = sorted(
            {dominated | nb for nb in self._masks if nb & undominated},
            key=int.bit_count,
            reverse=not staller,
        )
        a, b = a0, b0
        if staller:
            best = -1
            for child in children:
                v = 1 + self._plain_bounded(child, 0, a - 1, b - 1)
                if v > best:
                    best = v
                    if best >= b:
                        break
                    if best > a:
                        a = best
        else:
            best = INF
            for child in children:
                v = 1 + self._plain_bounded(child, 1, a - 1, b - 1)
                if v < best:
                    best = v
                    if best <= a:
                        break
                    if best < b:
                        b = best

        if best <= a0:
            hi = min(hi, best)
        elif best >= b0:
            lo = max(lo, best)
        else:
            lo = hi = best
        self.table.store_bounds(key, lo, hi)
        return best

    # ---- general phase ---------------------------------------------------

    def _children(self, state: GameState) -> List[Tuple[int, GameState]]:
        seen = {}
        for action, tr in self.game.successors(state):
            inc = 0 if action == PASS else 1
            seen.setdefault((inc, tr.state), None)
        return list(seen)

    def value_of(self, state: GameState) -> int:
        """Exact number of counted moves still to come from `state`"""
        if state.dominated == self.full:
            return 0
        if self.is_plain_state(state):
            if self.prune:
                return self._plain_bounded(state.dominated, int(state.to_move), -1, INF)
            return self._plain(state.dominated, int(state.to_move))

        key = self.transposition_key(state)
        value = self.table.lookup(key)
        if value is not None:
            return value
        self._tick()

        values = [inc + self.value_of(child) for inc, child in self._children(state)]
        best = min(values) if state.to_move is Player.DOMINATOR else max(values)
        return self.table.store(key, best)

    # ---- root split ------------------------------------------------------

    def _solve_child(self, child: GameState) -> Tuple[int, "GameSolver"]:
        worker = GameSolver(self.graph, self.variant, self.limits, self.prune)
        return worker.value_of(child), worker

    def _split_root(self, children: List[GameState], threads: int) -> List[int]:
        """
        Root children on a thread pool. Every child gets a private solver, so
        node counts never depend on scheduling; counts and table entries are
        merged back in child order.
        """
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(self._solve_child, children))

        nodes = 0
        entries = self.table.entries
        for _, worker in results:
            nodes += worker._stats().nodes
            for key, value in worker.table.entries.items():
                entries.setdefault(key, value)
        self._counter = itertools.count(nodes + 1)
        if nodes > self.limits.max_nodes:
            raise ResourceLimitError(f"node budget of {self.limits.max_nodes} exceeded", self._stats())
        if len(entries) > self.limits.max_table:
            raise ResourceLimitError(f"table budget of {self.limits.max_table} entries exceeded", self._stats())
        return [value for value, _ in results]

    # ---- public ----------------------------------------------------------

    def solve(self) -> SolveResult:
        self._counter = itertools.count(1)
        self._started = time.perf_counter()
        root = self.game.initial_state()

        if root.to_move is None:
            stats = self._stats()
            return SolveResult(0, (), stats.nodes, stats.table_entries, stats.millis, self.variant.name)

        options = list(self.game.successors(root))
        children = [tr.state for _, tr in options]
        threads = max(1, self.limits.threads)
        if threads > 1 and len(children) > 1:
            child_values = self._split_root(children, threads)
        else:
            child_values = [self.value_of(c) for c in children]

        totals = [(0 if a == PASS else 1) + v for (a, _), v in zip(options, child_values)]
        best = min(totals) if root.to_move is Player.DOMINATOR else max(totals)
        first_moves = tuple(a for (a, _), t in zip(options, totals) if t == best)

        stats = self._stats()
        logger.debug(
            "solved %s on %d vertices: value=%d nodes=%d table=%d %.1fms",
            self.variant.name,
            self.graph.order,
            best,
            stats.nodes,
            stats.table_entries,
            stats.millis,
        )
        return SolveResult(best, first_moves, stats.nodes, stats.table_entries, stats.millis, self.variant.name)

    def optimal_action(self, state: GameState) -> Tuple[Action, Transition]:
        """
        One optimal action. Ties go to the greedy choice (most newly dominated
        for Dominator, fewest for Staller), then the lowest index; a pass is
        taken only when no vertex is optimal.
        """
        target = self.value_of(state)
        candidates = []
        for action, tr in self.game.successors(state):
            inc = 0 if action == PASS else 1
            if inc + self.value_of(tr.state) == target:
                candidates.append((action, tr))
        if not candidates:
            raise ToolkitError("no optimal action found; table is inconsistent")

        def rank(item):
            action, tr = item
            if action == PASS:
                return (1, 0, 0)
            gain = tr.newly_dominated.bit_count()
            return (0, -gain if state.to_move is Player.DOMINATOR else gain, action)

        return min(candidates, key=rank)

    def best_line(self) -> List[TranscriptEntry]:
        game = self.game
        state = game.initial_state()
        transcript: List[TranscriptEntry] = []
        while state.to_move is not None:
            player = state.to_move
            action, tr = self.optimal_action(state)
            transcript.extend(game.entries(player, action, tr))
            state = tr.state
        return transcript


def solve(
    graph: Graph,
    variant: VariantSpec,
    limits: Optional[ResourceLimits] = None,
    prune: bool = False,
) -> SolveResult:
    return GameSolver(graph, variant, limits, prune).solve()


def best_line(
    graph: Graph,
    variant: VariantSpec,
    limits: Optional[ResourceLimits] = None,
    prune: bool = False,
) -> List[TranscriptEntry]:
    return GameSolver(graph, variant, limits, prune).best_line()


def counted_moves(transcript: List[TranscriptEntry]) -> int:
    return sum(1 for entry in transcript if entry.action != PASS)


def format_line(transcript: List[TranscriptEntry]) -> str:
    return " ".join(str(entry) for entry in transcript)
