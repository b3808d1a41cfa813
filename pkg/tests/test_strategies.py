import pytest

from src.game.engine import NoMovesError
from src.game.variants import Player, dgame, sdp, sgame
from src.graph.core import Graph, mask_of
from src.graph.families import build_cycle, build_path
from src.solver.minimax import solve
from src.strategies.cycle import PolicyNotApplicableError, d1_move, is_cycle, s1_move
from src.strategies.match import MatchResult, Policy, play_match


def test_is_cycle():
    assert is_cycle(build_cycle(5))
    assert not is_cycle(build_path(5))
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_cycle(two_triangles)


class TestS1:
    def test_plays_next_to_a_run_end(self, c8):
        assert s1_move(c8, mask_of([1])) == (0, False)

    def test_concedes_on_a_bipartition_side(self, c8):
        choice = s1_move(c8, mask_of([0, 2, 4, 6]))
        assert choice.concession
        assert choice.vertex == 0

    def test_needs_a_partial_dominated_set(self, c8):
        with pytest.raises(PolicyNotApplicableError):
            s1_move(c8, 0)
        with pytest.raises(PolicyNotApplicableError):
            s1_move(c8, c8.full_mask)

    def test_cycles_only(self):
        with pytest.raises(PolicyNotApplicableError):
            s1_move(build_path(5), mask_of([1]))


class TestD1:
    def test_answers_two_steps_ahead(self, c8):
        # Staller played 0 and newly dominated 1
        assert d1_move(c8, mask_of([1, 7]), 0, before=mask_of([7])) == 4

    def test_without_history_tries_both_directions(self, c8):
        assert d1_move(c8, mask_of([1, 7]), 0) == 4

    def test_falls_back_to_lowest_legal(self, c8):
        assert d1_move(c8, mask_of([1, 3, 7]), 0, before=mask_of([3, 7])) == 1

    def test_full_cycle(self, c8):
        with pytest.raises(NoMovesError):
            d1_move(c8, c8.full_mask, 0)


class TestMatch:
    def test_optimal_play_realises_the_value(self, c8):
        result = play_match(c8, dgame(), Policy.OPTIMAL, Policy.OPTIMAL)
        assert isinstance(result, MatchResult)
        assert result.length == 5
        assert result.to_dict()["dominator"] == "optimal"

    def test_optimal_side_keeps_its_bound(self, c8):
        value = solve(c8, dgame()).value
        assert play_match(c8, dgame(), Policy.OPTIMAL, Policy.FIRST_LEGAL).length <= value
        assert play_match(c8, dgame(), Policy.FIRST_LEGAL, Policy.OPTIMAL).length >= value

    @pytest.mark.parametrize("variant", [dgame(), sgame()])
    def test_cycle_strategies_play_legal_games(self, c8, variant):
        result = play_match(c8, variant, Policy.D1, Policy.S1)
        played = [e.action for e in result.transcript]
        assert len(set(played)) == len(played) == result.length
        assert result.length >= 4
        assert result.concessions >= 0

    def test_transcript_records_newly_dominated(self, p3):
        result = play_match(p3, dgame(), Policy.OPTIMAL, Policy.OPTIMAL)
        assert [e.action for e in result.transcript] == [1, 0]
        assert result.transcript[1].newly_dominated == (1,)

    def test_policy_roles(self, c8):
        with pytest.raises(PolicyNotApplicableError):
            play_match(c8, dgame(), Policy.S1, Policy.OPTIMAL)
        with pytest.raises(PolicyNotApplicableError):
            play_match(c8, dgame(), Policy.OPTIMAL, Policy.D1)

    def test_policy_scope(self, c8):
        with pytest.raises(PolicyNotApplicableError):
            play_match(build_path(6), dgame(), Policy.D1, Policy.OPTIMAL)
        with pytest.raises(PolicyNotApplicableError):
            play_match(c8, sdp(1, 3), Policy.FIRST_LEGAL, Policy.OPTIMAL)
        assert play_match(c8, sdp(1, 3), Policy.OPTIMAL, Policy.OPTIMAL).length == solve(c8, sdp(1, 3)).value

    def test_parse(self):
        assert Policy.parse(" D1 ") is Policy.D1
        assert Policy.parse("first-legal") is Policy.FIRST_LEGAL
        with pytest.raises(PolicyNotApplicableError):
            Policy.parse("random")


def _unplayable(cycle: Graph, dominated: int) -> int:
    return sum(1 for nb in cycle.neighbourhoods if nb & ~dominated == 0)


def _parity_sides(n: int):
    if n % 2:
        return set()
    return {mask_of(range(0, n, 2)), mask_of(range(1, n, 2))}


class TestS1Exhaustive:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_one_new_vertex_unless_conceding(self, n):
        cycle = build_cycle(n)
        for dominated in range(1, cycle.full_mask):
            vertex, concession = s1_move(cycle, dominated)
            gained = (cycle.neighbourhoods[vertex] & ~dominated).bit_count()
            assert gained == (2 if concession else 1)
            assert concession == (dominated in _parity_sides(n))

    def test_worked_examples(self, c8):
        vertex, concession = s1_move(c8, mask_of([0, 1, 2]))
        assert not concession
        assert (c8.neighbourhoods[vertex] & ~mask_of([0, 1, 2])).bit_count() == 1
        c6 = build_cycle(6)
        assert s1_move(c6, mask_of([0, 1])) == (0, False)

    @pytest.mark.parametrize("n", [8, 14])
    def test_optimal_dominator_cannot_shorten_s1_games(self, n):
        cycle = build_cycle(n)
        result = play_match(cycle, dgame(), Policy.OPTIMAL, Policy.S1)
        assert result.length >= (2 * n - 1) // 3 - 1
        assert result.length == solve(cycle, dgame()).value
        assert result.concessions <= 1
        staller_gains = [len(e.newly_dominated) for e in result.transcript if e.player is Player.STALLER]
        assert set(staller_gains) <= {1, 2}
        assert staller_gains.count(2) == result.concessions


class TestD1Exhaustive:
    @pytest.mark.parametrize("n", range(5, 9))
    def test_replies_are_legal_and_gain_three(self, n):
        cycle = build_cycle(n)
        nbs = cycle.neighbourhoods
        for before in range(cycle.full_mask):
            for s in range(n):
                if not nbs[s] & ~before:
                    continue
                after = before | nbs[s]
                if after == cycle.full_mask:
                    continue
                reply = d1_move(cycle, after, s, before)
                assert nbs[reply] & ~after
                newly = after & ~before
                two_ahead = [
                    (s + 3 * step) % n
                    for step in (1, -1)
                    if newly >> ((s + step) % n) & 1 and not after >> ((s + 3 * step) % n) & 1
                ]
                if two_ahead:
                    growth = _unplayable(cycle, after | nbs[reply]) - _unplayable(cycle, before)
                    assert growth >= 3

    def test_c14_reply_is_v5(self):
        c14 = build_cycle(14)
        # Dominator opened on 0, Staller answered on 12 and dominated 11
        before = mask_of([1, 13])
        after = mask_of([1, 11, 13])
        reply = d1_move(c14, after, 12, before)
        assert reply == 8
        assert _unplayable(c14, after | c14.neighbourhoods[reply]) - _unplayable(c14, before) == 3
