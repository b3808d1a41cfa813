#!/usr/bin/env python3
"""
TotDom Game Solver - Game Engine
Combinatorial Games Group

Legal-move generation and state transitions for every variant. A move on x
totally dominates N(x); a move is legal while N(x) still has an undominated
vertex. Passes (forced, trigger-induced, optional) never count as moves.

Passes that are not a choice are resolved inside the move that causes them,
so a GameState always has the player who actually decides next in to_move.
"""

from __future__ import annotations

from typing import Iterator, List, NamedTuple, Optional, Tuple, Union

from src.game.variants import PASS, Player, VariantSpec
from src.graph.core import Graph, VertexSet, iter_bits, mask_of
from src.utils.errors import ToolkitError

Action = Union[int, str]


class NoMovesError(ToolkitError):
    """Asked for moves in a finished game"""

    pass


class IllegalMoveError(ToolkitError):
    """Move or pass not allowed in this state"""

    pass


class GameState(NamedTuple):
    dominated: int
    moves_played: int
    to_move: Optional[Player]
    passes_remaining: Tuple[int, int]
    triggers_fired: int
    events_applied: int
    forced_applied: int


class Transition(NamedTuple):
    state: GameState
    passes: Tuple[Player, ...]
    newly_dominated: int
    exempt: bool


class TranscriptEntry(NamedTuple):
    player: Player
    action: Action
    newly_dominated: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "player": str(self.player),
            "action": self.action,
            "newly_dominated": list(self.newly_dominated),
        }

    def __str__(self) -> str:
        # d4(3,5): Dominator played 4 and dominated 3 and 5
        if self.action == PASS:
            return f"{self.player.letter}-pass"
        return f"{self.player.letter}{self.action}({','.join(map(str, self.newly_dominated))})"


class Game:
    """Rules of one variant on one graph"""

    def __init__(self, graph: Graph, variant: VariantSpec):
        variant.validate_for(graph)
        self.graph = graph
        self.variant = variant
        self.full = graph.full_mask
        self.masks = graph.neighbourhoods
        self.events = variant.events
        self.forced = variant.forced_passes
        if variant.triggers is not None:
            self.trigger_mask = mask_of(variant.triggers)
            self.trigger_cover = self.masks[variant.triggers[0]] | self.masks[variant.triggers[1]]
        else:
            self.trigger_mask = 0
            self.trigger_cover = 0

    # ---- states ------------------------------------------------------

    def initial_state(self) -> GameState:
        dominated = self.variant.initial_dominated.mask
        events_applied = 0
        while events_applied < len(self.events) and self.events[events_applied].after_move == 0:
            dominated |= self.events[events_applied].vertices.mask
            events_applied += 1

        holder = self.variant.first_player
        forced_applied = 0
        while forced_applied < len(self.forced) and self.forced[forced_applied].after_move == 0:
            holder = holder.opponent
            forced_applied += 1

        return GameState(
            dominated=dominated,
            moves_played=0,
            to_move=None if dominated == self.full else holder,
            passes_remaining=self.variant.optional_passes,
            triggers_fired=0,
            events_applied=events_applied,
            forced_applied=forced_applied,
        )

    def is_terminal(self, state: GameState) -> bool:
        return state.dominated == self.full

    def exemption_available(self, state: GameState) -> bool:
        return (
            self.variant.first_move_exemption
            and state.triggers_fired == 0
            and state.to_move is Player.DOMINATOR
        )

    def legal_mask(self, state: GameState) -> int:
        if state.dominated == self.full:
            raise NoMovesError("the game is over, every vertex is dominated")
        undominated = self.full & ~state.dominated
        legal = mask_of(x for x, nb in enumerate(self.masks) if nb & undominated)
        if self.exemption_available(state):
            legal |= self.trigger_mask
        return legal

    def legal_moves(self, state: GameState) -> VertexSet:
        return VertexSet(self.legal_mask(state))

    def can_pass(self, state: GameState) -> bool:
        return state.to_move is not None and state.passes_remaining[state.to_move] > 0

    def actions(self, state: GameState) -> List[Action]:
        """Legal vertices ascending, then PASS if a voluntary pass is allowed"""
        result: List[Action] = list(iter_bits(self.legal_mask(state)))
        if self.can_pass(state):
            result.append(PASS)
        return result

    # ---- transitions -------------------------------------------------

    def play(self, state: GameState, action: Action) -> Transition:
        if action == PASS:
            return self._voluntary_pass(state)
        if not isinstance(action, int) or isinstance(action, bool) or not 0 <= action < self.graph.order:
            raise IllegalMoveError(f"{action!r} is not a vertex")
        if not self.legal_mask(state) >> action & 1:
            raise IllegalMoveError(f"vertex {action} dominates nothing new")
        return self._move(state, action)

    def _move(self, state: GameState, x: int) -> Transition:
        mover = state.to_move
        newly = self.masks[x] & ~state.dominated
        dominated = state.dominated | self.masks[x]
        moves = state.moves_played + 1

        triggers_fired = state.triggers_fired
        trigger_pass = False
        if self.trigger_mask >> x & 1 and mover is Player.DOMINATOR and triggers_fired < 2:
            triggers_fired += 1
            trigger_pass = True
        exempt = newly == 0

        events_applied = state.events_applied
        while events_applied < len(self.events) and self.events[events_applied].after_move == moves:
            dominated |= self.events[events_applied].vertices.mask
            events_applied += 1

        holder = self.variant.next_holder(mover, moves)
        passes: List[Player] = []
        forced_applied = state.forced_applied
        while forced_applied < len(self.forced) and self.forced[forced_applied].after_move == moves:
            passes.append(holder)
            holder = holder.opponent
            forced_applied += 1
        if trigger_pass and holder is Player.STALLER:
            passes.append(holder)
            holder = holder.opponent

        terminal = dominated == self.full
        new_state = GameState(
            dominated=dominated,
            moves_played=moves,
            to_move=None if terminal else holder,
            passes_remaining=state.passes_remaining,
            triggers_fired=triggers_fired,
            events_applied=events_applied,
            forced_applied=forced_applied,
        )
        return Transition(new_state, () if terminal else tuple(passes), newly, exempt)

    def _voluntary_pass(self, state: GameState) -> Transition:
        if not self.can_pass(state):
            raise IllegalMoveError("no pass left for the player to move")
        player = state.to_move
        remaining = list(state.passes_remaining)
        remaining[player] -= 1
        new_state = state._replace(to_move=player.opponent, passes_remaining=tuple(remaining))
        return Transition(new_state, (player,), 0, False)

    def successors(self, state: GameState) -> Iterator[Tuple[Action, Transition]]:
        for action in self.actions(state):
            yield action, self.play(state, action)

    def replay(self, actions: List[Action]) -> Tuple[GameState, List[TranscriptEntry]]:
        """Play a sequence of chosen actions from the start; forced passes are filled in"""
        state = self.initial_state()
        transcript: List[TranscriptEntry] = []
        for action in actions:
            if state.to_move is None:
                raise IllegalMoveError("actions continue after the game ended")
            player = state.to_move
            tr = self.play(state, action)
            transcript.extend(self.entries(player, action, tr))
            state = tr.state
        return state, transcript

    @staticmethod
    def entries(player: Player, action: Action, tr: Transition) -> List[TranscriptEntry]:
        """Transcript lines for one chosen action and the passes it caused"""
        if action == PASS:
            return [TranscriptEntry(player, PASS, ())]
        out = [TranscriptEntry(player, action, tuple(iter_bits(tr.newly_dominated)))]
        out.extend(TranscriptEntry(p, PASS, ()) for p in tr.passes)
        return out


# Module-level convenience wrappers


def legal_moves(graph: Graph, state: GameState, variant: VariantSpec) -> VertexSet:
    return Game(graph, variant).legal_moves(state)


def apply_move(graph: Graph, state: GameState, variant: VariantSpec, action: Action) -> GameState:
    return Game(graph, variant).play(state, action).state


def initial_state(graph: Graph, variant: VariantSpec) -> GameState:
    return Game(graph, variant).initial_state()
