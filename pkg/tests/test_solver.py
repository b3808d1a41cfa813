import pytest

from src.config.settings import ResourceLimits
from src.game.variants import PASS, Player, dgame, sdp, sgame, ssp, staller_pass
from src.graph.families import build_complete, build_cycle, build_gndm, build_hm, build_k_leaves, build_path
from src.solver.critical import is_critical, values_all_single_predominations
from src.solver.minimax import GameSolver, ResourceLimitError, TranspositionTable, best_line, counted_moves, solve


def cycle_value(n: int) -> int:
    return (2 * n + 1) // 3 - (1 if n % 6 == 4 else 0)


def path_value(n: int) -> int:
    return (2 * n) // 3 if n % 6 == 5 else -(-2 * n // 3)


@pytest.mark.parametrize("n", range(3, 12))
def test_cycles(n):
    assert solve(build_cycle(n), dgame()).value == cycle_value(n)


@pytest.mark.parametrize("n", range(2, 12))
def test_paths(n):
    assert solve(build_path(n), dgame()).value == path_value(n)


def test_small_values():
    assert [cycle_value(n) for n in (3, 4, 8, 14)] == [2, 2, 5, 9]
    assert [path_value(n) for n in (2, 3, 6)] == [2, 2, 4]


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graphs(n):
    assert solve(build_complete(n), dgame()).value == 2
    assert solve(build_complete(n), sgame()).value == 2


def test_c8_both_starts(c8):
    assert solve(c8, dgame()).value == 5
    assert solve(c8, sgame()).value == 4


def test_k_leaves():
    for k in (2, 3):
        assert solve(build_k_leaves(k), dgame()).value == k + 1


def test_hm():
    h = build_hm(5)
    assert solve(h, dgame()).value == 2
    assert solve(h, dgame([h.vertex("w1")])).value == 1
    assert solve(h, dgame([h.vertex("u1")])).value == 2


def test_attached_clique_drops_by_two():
    g = build_gndm(8, 4, 4)
    assert solve(g, dgame()).value == 7
    assert solve(g, dgame([g.vertex("w1")])).value == 5


class TestResult:
    def test_first_moves_and_line(self, p3):
        result = solve(p3, dgame())
        assert result.value == 2
        assert result.first_moves == (0, 1, 2)
        assert result.optimal_first_moves.to_list() == [0, 1, 2]
        assert not result.pass_optimal
        line = best_line(p3, dgame())
        assert [(e.player, e.action) for e in line] == [(Player.DOMINATOR, 1), (Player.STALLER, 0)]

    def test_to_dict(self, p3):
        data = solve(p3, dgame()).to_dict(timing=False)
        assert list(data) == ["value", "first_moves", "nodes", "table_entries", "millis"]
        assert data["millis"] is None

    def test_terminal_root(self, p3):
        result = solve(p3, dgame([0, 1, 2]))
        assert result.value == 0
        assert result.first_moves == ()

    def test_staller_pass_line_counts_moves_only(self, c8):
        solver = GameSolver(c8, staller_pass())
        value = solver.solve().value
        line = solver.best_line()
        assert counted_moves(line) == value
        assert value >= 5

    def test_pass_is_last_in_tie_break(self):
        p2 = build_path(2)
        solver = GameSolver(p2, staller_pass())
        state = solver.game.play(solver.game.initial_state(), 0).state
        action, _ = solver.optimal_action(state)
        assert action == 1
        assert PASS in solver.game.actions(state)


class TestSearch:
    def test_prune_and_threads_agree(self, c8):
        expected = solve(c8, dgame()).value
        assert solve(c8, dgame(), prune=True).value == expected
        assert solve(c8, dgame(), ResourceLimits(threads=2)).value == expected
        assert solve(c8, sdp(1, 3), prune=True).value == solve(c8, sdp(1, 3)).value

    def test_shared_table_across_plain_variants(self, c8):
        table = TranspositionTable()
        assert GameSolver(c8, dgame(), table=table).solve().value == 5
        size = len(table)
        assert GameSolver(c8, sgame(), table=table).solve().value == 4
        assert GameSolver(c8, dgame([0]), table=table).solve().value == 5
        assert len(table) >= size

    def test_keys(self, c8):
        solver = GameSolver(c8, ssp(0, 4))
        root = solver.game.initial_state()
        assert isinstance(solver.transposition_key(root), tuple)
        plain = GameSolver(c8, dgame())
        assert plain.transposition_key(plain.game.initial_state()) == 0

    def test_node_budget(self, c8):
        with pytest.raises(ResourceLimitError) as info:
            GameSolver(c8, dgame(), ResourceLimits(max_nodes=1)).solve()
        assert info.value.stats.nodes >= 1

    def test_table_budget(self, c8):
        with pytest.raises(ResourceLimitError):
            GameSolver(c8, dgame(), ResourceLimits(max_table=2)).solve()

    def test_untimed_result_ignores_threads(self):
        g = build_gndm(8, 4, 4)
        single = solve(g, dgame()).to_dict(timing=False)
        assert single["nodes"] is None and single["table_entries"] is None
        assert solve(g, dgame(), ResourceLimits(threads=4)).to_dict(timing=False) == single

    def test_threaded_node_count_is_repeatable(self):
        g = build_gndm(8, 4, 4)
        counts = {solve(g, dgame(), ResourceLimits(threads=3)).nodes for _ in range(4)}
        assert len(counts) == 1
        assert counts.pop() >= solve(g, dgame()).nodes

    def test_threaded_node_budget(self, c8):
        with pytest.raises(ResourceLimitError):
            GameSolver(c8, dgame(), ResourceLimits(max_nodes=3, threads=2)).solve()


class TestCritical:
    def test_single_predominations(self, c8):
        assert values_all_single_predominations(c8) == {v: 5 for v in range(8)}
        assert set(values_all_single_predominations(c8, Player.STALLER).values()) == {4}

    def test_critical(self, c8):
        assert is_critical(build_path(2))
        assert is_critical(build_complete(3))
        assert not is_critical(c8)
