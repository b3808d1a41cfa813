#!/usr/bin/env python3
"""
TotDom Game Solver - Game Variants
Combinatorial Games Group

A VariantSpec describes one game variant as plain data: who starts, an
optional explicit opening order, the predominated set, pass budgets, forced
passes, delayed predomination events and trigger vertices. The engine reads
nothing else, so every variant is just a different VariantSpec.

Turn order for variants without optional passes or triggers depends only on
the number of counted moves made, which is what unfold_schedule() uses to
reject forced passes that would land on the wrong player.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from src.graph.core import Graph, InvalidVertexError, VertexRef, VertexSet
from src.utils.errors import ToolkitError

PASS = "pass"


class VariantError(ToolkitError):
    """Inconsistent variant parameters"""

    pass


class Player(IntEnum):
    DOMINATOR = 0
    STALLER = 1

    @property
    def opponent(self) -> "Player":
        return Player(1 - self)

    @property
    def letter(self) -> str:
        return "d" if self is Player.DOMINATOR else "s"

    def __str__(self) -> str:
        return self.name.lower()

    def __format__(self, spec: str) -> str:
        return format(str(self), spec)


class ForcedPass(NamedTuple):
    after_move: int
    player: Player


class PredominationEvent(NamedTuple):
    after_move: int
    vertices: VertexSet


class Turn(NamedTuple):
    """One entry of an unfolded schedule"""

    player: Player
    is_pass: bool


@dataclass(frozen=True)
class VariantSpec:
    name: str
    first_player: Player = Player.DOMINATOR
    schedule_prefix: Tuple[Player, ...] = ()
    initial_dominated: VertexSet = field(default_factory=VertexSet)
    optional_passes: Tuple[int, int] = (0, 0)
    forced_passes: Tuple[ForcedPass, ...] = ()
    events: Tuple[PredominationEvent, ...] = ()
    triggers: Optional[Tuple[int, int]] = None
    first_move_exemption: bool = False

    def __post_init__(self):
        object.__setattr__(self, "first_player", Player(self.first_player))
        object.__setattr__(self, "schedule_prefix", tuple(Player(p) for p in self.schedule_prefix))
        object.__setattr__(
            self,
            "forced_passes",
            tuple(ForcedPass(fp.after_move, Player(fp.player)) for fp in self.forced_passes),
        )
        # stable sort keeps the order of events sharing an index
        object.__setattr__(self, "events", tuple(sorted(self.events, key=lambda e: e.after_move)))
        self._validate()

    def _validate(self) -> None:
        if self.schedule_prefix and self.schedule_prefix[0] != self.first_player:
            raise VariantError("schedule prefix must start with the first player")
        if len(self.optional_passes) != 2 or any(b not in (0, 1) for b in self.optional_passes):
            raise VariantError(f"optional pass budgets must be 0 or 1, got {self.optional_passes}")
        has_optional = any(self.optional_passes)

        if self.triggers is not None:
            u1, u2 = self.triggers
            if u1 == u2:
                raise VariantError("trigger vertices must be distinct")
            if u1 < 0 or u2 < 0:
                raise VariantError("trigger vertices must be valid vertex indices")
            if has_optional:
                raise VariantError("optional passes and triggers cannot be combined")
            if self.forced_passes or self.schedule_prefix:
                raise VariantError("triggers cannot be combined with forced passes or a schedule prefix")
        elif self.first_move_exemption:
            raise VariantError("first-move exemption needs trigger vertices")

        if has_optional and (self.forced_passes or self.schedule_prefix):
            raise VariantError("optional passes cannot be combined with forced passes or a schedule prefix")

        for event in self.events:
            if event.after_move < 0:
                raise VariantError("event indices must be >= 0")

        indices = [fp.after_move for fp in self.forced_passes]
        if any(i < 0 for i in indices):
            raise VariantError("forced pass indices must be >= 0")
        if indices != sorted(indices):
            raise VariantError("forced pass indices must be non-decreasing")
        if self.forced_passes:
            self.unfold_schedule(max(indices) + 1)

    # ------------------------------------------------------------------

    @property
    def is_plain(self) -> bool:
        """Alternating D/S game, possibly with a predominated set"""
        return (
            not self.schedule_prefix
            and not any(self.optional_passes)
            and not self.forced_passes
            and self.triggers is None
            and all(e.after_move == 0 for e in self.events)
        )

    def next_holder(self, mover: Player, moves_played: int) -> Player:
        """Turn holder after counted move number `moves_played` made by `mover`"""
        if moves_played < len(self.schedule_prefix):
            return self.schedule_prefix[moves_played]
        return mover.opponent

    def unfold_schedule(self, moves: int) -> List[Turn]:
        """
        Turns up to and including counted move `moves`, with forced passes
        in place. Raises VariantError for a forced pass whose player is not
        the turn holder at that point.
        """
        turns: List[Turn] = []
        forced = list(self.forced_passes)
        cursor = 0
        holder = self.first_player

        def consume(after: int) -> None:
            nonlocal cursor, holder
            while cursor < len(forced) and forced[cursor].after_move == after:
                fp = forced[cursor]
                if fp.player != holder:
                    raise VariantError(
                        f"{self.name}: {fp.player} cannot pass after move {after}, "
                        f"it is {holder}'s turn"
                    )
                turns.append(Turn(holder, True))
                holder = holder.opponent
                cursor += 1

        consume(0)
        for j in range(1, moves + 1):
            mover = holder
            turns.append(Turn(mover, False))
            holder = self.next_holder(mover, j)
            consume(j)
        return turns

    def schedule_tokens(self, moves: int) -> List[str]:
        """Readable schedule, e.g. ['d1', 'S-pass', 'd2', 's1']"""
        counters = {Player.DOMINATOR: 0, Player.STALLER: 0}
        tokens = []
        for turn in self.unfold_schedule(moves):
            if turn.is_pass:
                tokens.append(f"{turn.player.letter.upper()}-pass")
            else:
                counters[turn.player] += 1
                tokens.append(f"{turn.player.letter}{counters[turn.player]}")
        return tokens

    def validate_for(self, graph: Graph) -> None:
        full = graph.full_mask
        sets = [self.initial_dominated] + [e.vertices for e in self.events]
        for s in sets:
            if s.mask & ~full:
                raise InvalidVertexError(f"{self.name}: vertex set {s} not inside the graph")
        if self.triggers is not None:
            for t in self.triggers:
                graph.vertex(t)

    def describe(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "first_player": str(self.first_player),
            "schedule_prefix": [str(p) for p in self.schedule_prefix],
            "initial_dominated": self.initial_dominated.to_list(),
            "optional_passes": {"dominator": self.optional_passes[0], "staller": self.optional_passes[1]},
            "forced_passes": [[fp.after_move, str(fp.player)] for fp in self.forced_passes],
            "events": [[e.after_move, e.vertices.to_list()] for e in self.events],
            "triggers": list(self.triggers) if self.triggers else None,
            "first_move_exemption": self.first_move_exemption,
        }


# ----------------------------------------------------------------------
# Constructors
# ----------------------------------------------------------------------


def _as_set(vertices: Optional[Iterable[int]]) -> VertexSet:
    if vertices is None:
        return VertexSet()
    if isinstance(vertices, VertexSet):
        return vertices
    return VertexSet.of(vertices)


def _suffix(s: VertexSet) -> str:
    return f"|S={{{','.join(map(str, s))}}}" if s else ""


def _prefix_name(first_player: Player) -> str:
    return "dgame" if first_player is Player.DOMINATOR else "sgame"


def dgame(S: Optional[Iterable[int]] = None) -> VariantSpec:
    s = _as_set(S)
    return VariantSpec(name="dgame" + _suffix(s), initial_dominated=s)


def sgame(S: Optional[Iterable[int]] = None) -> VariantSpec:
    s = _as_set(S)
    return VariantSpec(name="sgame" + _suffix(s), first_player=Player.STALLER, initial_dominated=s)


def staller_pass(first_player: Player = Player.DOMINATOR, S: Optional[Iterable[int]] = None) -> VariantSpec:
    s = _as_set(S)
    return VariantSpec(
        name=f"{_prefix_name(Player(first_player))}+spass{_suffix(s)}",
        first_player=first_player,
        initial_dominated=s,
        optional_passes=(0, 1),
    )


def dominator_pass(first_player: Player = Player.DOMINATOR, S: Optional[Iterable[int]] = None) -> VariantSpec:
    s = _as_set(S)
    return VariantSpec(
        name=f"{_prefix_name(Player(first_player))}+dpass{_suffix(s)}",
        first_player=first_player,
        initial_dominated=s,
        optional_passes=(1, 0),
    )


def double_staller(S: Optional[Iterable[int]] = None) -> VariantSpec:
    s = _as_set(S)
    return VariantSpec(
        name="double-staller" + _suffix(s),
        first_player=Player.STALLER,
        schedule_prefix=(Player.STALLER, Player.STALLER),
        initial_dominated=s,
    )


def delayed_predom(m: int, S: Iterable[int], first_player: Player = Player.DOMINATOR) -> VariantSpec:
    """S becomes dominated for free right after counted move m (m = 0: before the first move)"""
    if m < 0:
        raise VariantError(f"m must be >= 0, got {m}")
    s = _as_set(S)
    return VariantSpec(
        name=f"{_prefix_name(Player(first_player))}|^{m}{{{','.join(map(str, s))}}}",
        first_player=first_player,
        events=(PredominationEvent(m, s),),
    )


def sdp(k: int, l: int, first_player: Player = Player.DOMINATOR) -> VariantSpec:
    """Forced uncounted Staller pass after move k, then Dominator pass after move l"""
    if k > l:
        raise VariantError(f"sdp needs k <= l, got k={k}, l={l}")
    return VariantSpec(
        name=f"sdp({k},{l})" if first_player == Player.DOMINATOR else f"sgame+sdp({k},{l})",
        first_player=first_player,
        forced_passes=(ForcedPass(k, Player.STALLER), ForcedPass(l, Player.DOMINATOR)),
    )


def sdp_predom(k: int, l: int, S: Iterable[int], first_player: Player = Player.DOMINATOR) -> VariantSpec:
    """sdp(k, l) where S becomes dominated when Dominator passes"""
    base = sdp(k, l, first_player)
    s = _as_set(S)
    return VariantSpec(
        name=f"{base.name}|^{l}{{{','.join(map(str, s))}}}",
        first_player=base.first_player,
        forced_passes=base.forced_passes,
        events=(PredominationEvent(l, s),),
    )


def ssp(u_first: int, u_second: int, first_player: Player = Player.DOMINATOR) -> VariantSpec:
    """Staller passes after each of Dominator's first two moves on the triggers"""
    if u_first == u_second:
        raise VariantError("trigger vertices must be distinct")
    return VariantSpec(
        name=f"ssp({u_first},{u_second})" if first_player == Player.DOMINATOR else f"sgame+ssp({u_first},{u_second})",
        first_player=first_player,
        triggers=(u_first, u_second),
        first_move_exemption=True,
    )


VARIANT_CONSTRUCTORS = {
    "dgame": dgame,
    "sgame": sgame,
    "staller_pass": staller_pass,
    "dominator_pass": dominator_pass,
    "double_staller": double_staller,
    "delayed_predom": delayed_predom,
    "sdp": sdp,
    "sdp_predom": sdp_predom,
    "ssp": ssp,
}


def make_variant(kind: str, **params) -> VariantSpec:
    if kind not in VARIANT_CONSTRUCTORS:
        raise VariantError(f"unknown variant kind {kind!r}")
    try:
        return VARIANT_CONSTRUCTORS[kind](**params)
    except TypeError as e:
        raise VariantError(f"bad parameters for {kind}: {e}") from e


def is_admissible_sdp(k: int, l: int, first_player: Player = Player.DOMINATOR) -> bool:
    try:
        sdp(k, l, first_player)
    except VariantError:
        return False
    return True


def admissible_sdp_pairs(max_index: int, first_player: Player = Player.DOMINATOR) -> List[Tuple[int, int]]:
    """All (k, l) with 0 <= k <= l <= max_index whose passes land on the right player"""
    return [
        (k, l)
        for k in range(max_index + 1)
        for l in range(k, max_index + 1)
        if is_admissible_sdp(k, l, first_player)
    ]


# ----------------------------------------------------------------------
# DSL
# ----------------------------------------------------------------------


def _split_set(body: str) -> Tuple[str, Optional[str]]:
    """Separate a trailing 'S=...' list from the other parameters"""
    marker = body.find("S=")
    if marker < 0:
        return body, None
    return body[:marker].rstrip(", "), body[marker + 2:]


def _params(body: str) -> Dict[str, str]:
    params: Dict[str, str] = {}
    for item in filter(None, (p.strip() for p in body.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise VariantError(f"bad variant parameter {item!r}")
        params[key.strip()] = value.strip()
    return params


def _resolve_set(graph: Graph, text: Optional[str]) -> VertexSet:
    if text is None:
        return VertexSet()
    refs: Sequence[VertexRef] = [r.strip() for r in text.split(",") if r.strip()]
    if not refs:
        raise VariantError("empty predominated set")
    return graph.vertex_set(refs)


def _int(params: Dict[str, str], key: str) -> int:
    if key not in params:
        raise VariantError(f"missing parameter {key!r}")
    try:
        return int(params[key])
    except ValueError as e:
        raise VariantError(f"parameter {key!r} must be an integer") from e


def _player(letter: str) -> Player:
    letter = letter.strip().lower()
    if letter == "d":
        return Player.DOMINATOR
    if letter == "s":
        return Player.STALLER
    raise VariantError(f"expected 'd' or 's', got {letter!r}")


def parse_variant(text: str, graph: Graph) -> VariantSpec:
    """
    Parse the variant DSL: "d", "s", "d|S=1,5", "spass:d", "dpass:s|S=w1",
    "ss", "delayed:m=3,S=1,5", "sdp:k=1,l=3", "sdp:k=1,l=3,S=u1,u5",
    "ssp:u=u1,v=u5". Vertex references are landmark names or indices.
    """
    text = text.strip()
    head, bar, tail = text.partition("|")
    if bar and not tail.strip().startswith("S="):
        raise VariantError(f"expected '|S=...' in {text!r}")
    predominated = _resolve_set(graph, tail.strip()[2:]) if bar else VertexSet()

    kind, _, body = head.partition(":")
    kind = kind.strip().lower()
    rest, set_text = _split_set(body)
    if set_text is not None:
        if predominated:
            raise VariantError("predominated set given twice")
        predominated = _resolve_set(graph, set_text)

    if kind in ("d", "s"):
        if body.strip():
            raise VariantError(f"{kind!r} takes no parameters")
        spec = dgame(predominated) if kind == "d" else sgame(predominated)
    elif kind in ("spass", "dpass"):
        first = _player(rest or "d")
        ctor = staller_pass if kind == "spass" else dominator_pass
        spec = ctor(first, predominated)
    elif kind == "ss":
        spec = double_staller(predominated)
    elif kind == "delayed":
        if not predominated:
            raise VariantError("delayed needs S=...")
        spec = delayed_predom(_int(_params(rest), "m"), predominated)
    elif kind == "sdp":
        params = _params(rest)
        k, l = _int(params, "k"), _int(params, "l")
        spec = sdp_predom(k, l, predominated) if predominated else sdp(k, l)
    elif kind == "ssp":
        if predominated:
            raise VariantError("ssp does not take a predominated set")
        params = _params(rest)
        for key in ("u", "v"):
            if key not in params:
                raise VariantError(f"missing parameter {key!r}")
        spec = ssp(graph.vertex(params["u"]), graph.vertex(params["v"]))
    else:
        raise VariantError(f"unknown variant {kind!r}")

    spec.validate_for(graph)
    return spec
