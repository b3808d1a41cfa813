#!/usr/bin/env python3
"""
TotDom Game Solver - Game Package
Combinatorial Games Group

Variant descriptions and the rules engine.
"""

from src.game.variants import (
    PASS,
    Player,
    ForcedPass,
    PredominationEvent,
    Turn,
    VariantSpec,
    VariantError,
    dgame,
    sgame,
    staller_pass,
    dominator_pass,
    double_staller,
    delayed_predom,
    sdp,
    sdp_predom,
    ssp,
    make_variant,
    is_admissible_sdp,
    admissible_sdp_pairs,
    parse_variant,
)
from src.game.engine import (
    Action,
    Game,
    GameState,
    Transition,
    TranscriptEntry,
    NoMovesError,
    IllegalMoveError,
    legal_moves,
    apply_move,
    initial_state,
)

__all__ = [
    "PASS",
    "Player",
    "ForcedPass",
    "PredominationEvent",
    "Turn",
    "VariantSpec",
    "VariantError",
    "dgame",
    "sgame",
    "staller_pass",
    "dominator_pass",
    "double_staller",
    "delayed_predom",
    "sdp",
    "sdp_predom",
    "ssp",
    "make_variant",
    "is_admissible_sdp",
    "admissible_sdp_pairs",
    "parse_variant",
    "Action",
    "Game",
    "GameState",
    "Transition",
    "TranscriptEntry",
    "NoMovesError",
    "IllegalMoveError",
    "legal_moves",
    "apply_move",
    "initial_state",
]
