#!/usr/bin/env python3
"""
TotDom Game Solver - Match Harness
Combinatorial Games Group

Plays one deterministic game between two policies and returns the
transcript. Optimal play comes from the exact solver; S1 and D1 come from
strategies.cycle and are only accepted on plain games on cycles.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from src.config.settings import ResourceLimits
from src.game.engine import Action, Game, GameState, IllegalMoveError, TranscriptEntry, Transition
from src.game.variants import Player, VariantSpec
from src.graph.core import Graph
from src.solver.minimax import GameSolver
from src.strategies.cycle import PolicyNotApplicableError, d1_move, is_cycle, s1_move
from src.utils.errors import ToolkitError

logger = logging.getLogger(__name__)


class PolicyFaultError(ToolkitError):
    """A policy produced an action the rules do not allow"""

    def __init__(self, policy: "Policy", message: str):
        super().__init__(f"policy {policy.value}: {message}")
        self.policy = policy


class Policy(Enum):
    OPTIMAL = "optimal"
    S1 = "s1"
    D1 = "d1"
    FIRST_LEGAL = "first-legal"

    @classmethod
    def parse(cls, text: str) -> "Policy":
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = ", ".join(p.value for p in cls)
            raise PolicyNotApplicableError(f"unknown policy {text!r} (known: {names})")


@dataclass
class MatchResult:
    transcript: List[TranscriptEntry]
    length: int
    concessions: int = 0
    policies: Tuple[str, str] = ("", "")

    def to_dict(self) -> dict:
        return {
            "dominator": self.policies[0],
            "staller": self.policies[1],
            "length": self.length,
            "concessions": self.concessions,
            "transcript": [entry.to_dict() for entry in self.transcript],
        }


def _check_policies(graph: Graph, variant: VariantSpec, dom: Policy, sta: Policy) -> None:
    if dom is Policy.S1 or sta is Policy.D1:
        raise PolicyNotApplicableError("S1 plays for Staller and D1 plays for Dominator")
    custom = [p for p in (dom, sta) if p is not Policy.OPTIMAL]
    if custom and not variant.is_plain:
        raise PolicyNotApplicableError(f"non-optimal policies need a plain D- or S-game, got {variant.name}")
    if any(p in (Policy.S1, Policy.D1) for p in custom) and not is_cycle(graph):
        raise PolicyNotApplicableError("S1 and D1 are defined on cycles only")


def play_match(
    graph: Graph,
    variant: VariantSpec,
    dom_policy: Policy,
    sta_policy: Policy,
    limits: Optional[ResourceLimits] = None,
    solver: Optional[GameSolver] = None,
) -> MatchResult:
    _check_policies(graph, variant, dom_policy, sta_policy)
    game = Game(graph, variant)
    solver = solver or GameSolver(graph, variant, limits)

    state = game.initial_state()
    transcript: List[TranscriptEntry] = []
    concessions = 0
    last_staller: Optional[int] = None
    before_staller = 0

    while state.to_move is not None:
        player = state.to_move
        policy = dom_policy if player is Player.DOMINATOR else sta_policy
        action, concession = _choose(solver, game, state, policy, last_staller, before_staller)
        concessions += concession
        try:
            tr = game.play(state, action)
        except IllegalMoveError as e:
            raise PolicyFaultError(policy, str(e)) from e

        if player is Player.STALLER:
            last_staller, before_staller = (action if isinstance(action, int) else None), state.dominated
        transcript.extend(game.entries(player, action, tr))
        state = tr.state

    length = sum(1 for entry in transcript if isinstance(entry.action, int))
    logger.debug("match %s vs %s on %s: %d moves", dom_policy.value, sta_policy.value, variant.name, length)
    return MatchResult(transcript, length, concessions, (dom_policy.value, sta_policy.value))


def _choose(
    solver: GameSolver,
    game: Game,
    state: GameState,
    policy: Policy,
    last_staller: Optional[int],
    before_staller: int,
) -> Tuple[Action, bool]:
    if policy is Policy.OPTIMAL:
        return solver.optimal_action(state)[0], False
    if policy is Policy.FIRST_LEGAL:
        return game.actions(state)[0], False
    if policy is Policy.S1:
        if state.dominated == 0:
            # S1 starts from a non-empty dominated set; the opening is played optimally
            return solver.optimal_action(state)[0], False
        choice = s1_move(game.graph, state.dominated)
        return choice.vertex, choice.concession
    if policy is Policy.D1:
        if last_staller is None:
            # D1 is a reply strategy; moves before Staller's first are optimal
            return solver.optimal_action(state)[0], False
        return d1_move(game.graph, state.dominated, last_staller, before_staller), False
    raise PolicyNotApplicableError(f"unsupported policy {policy}")
