"""Properties every exact value must satisfy, checked on random small graphs"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.game.variants import (
    Player,
    admissible_sdp_pairs,
    delayed_predom,
    dgame,
    dominator_pass,
    double_staller,
    sdp,
    sdp_predom,
    sgame,
    ssp,
    staller_pass,
)
from src.graph.core import remove_vertex
from src.graph.families import build_cycle
from src.solver.domination import total_domination_number
from src.solver.minimax import GameSolver, solve
from src.solver.oracle import OracleCapError, oracle_solve
from src.verify.suites import removable_vertices
from tests.conftest import ORACLE_ORDERS, ORACLE_SETTINGS, PROPERTY_SETTINGS, connected_graphs, graphs_with_subset


@st.composite
def games(draw, min_order: int = 2, max_order: int = 6):
    graph = draw(connected_graphs(min_order=min_order, max_order=max_order))
    n = graph.order
    vertices = st.lists(st.integers(0, n - 1), unique=True, min_size=1, max_size=n)
    kind = draw(st.sampled_from(["d", "s", "spass", "dpass", "ss", "delayed", "sdp", "sdp_predom", "ssp"]))
    first = draw(st.sampled_from([Player.DOMINATOR, Player.STALLER]))
    if kind == "d":
        return graph, dgame(draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n)))
    if kind == "s":
        return graph, sgame(draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n)))
    if kind == "spass":
        return graph, staller_pass(first)
    if kind == "dpass":
        return graph, dominator_pass(first)
    if kind == "ss":
        return graph, double_staller()
    if kind == "delayed":
        return graph, delayed_predom(draw(st.integers(0, n)), draw(vertices), first)
    if kind in ("sdp", "sdp_predom"):
        k, l = draw(st.sampled_from(admissible_sdp_pairs(n, first)))
        if kind == "sdp":
            return graph, sdp(k, l, first)
        return graph, sdp_predom(k, l, draw(vertices), first)
    u, v = draw(st.lists(st.integers(0, n - 1), unique=True, min_size=2, max_size=2))
    return graph, ssp(u, v, first)


@pytest.mark.slow
@ORACLE_SETTINGS
@given(games(*ORACLE_ORDERS))
def test_solver_matches_oracle(game):
    graph, variant = game
    assert solve(graph, variant).value == oracle_solve(graph, variant)


@PROPERTY_SETTINGS
@given(games())
def test_pruning_gives_the_same_values(game):
    graph, variant = game
    assert solve(graph, variant, prune=True).value == solve(graph, variant).value


@PROPERTY_SETTINGS
@given(games(max_order=5))
def test_best_line_realises_the_value(game):
    graph, variant = game
    solver = GameSolver(graph, variant)
    value = solver.solve().value
    line = solver.best_line()
    assert sum(1 for entry in line if isinstance(entry.action, int)) == value


@PROPERTY_SETTINGS
@given(graphs_with_subset(max_order=7))
def test_continuation_principle(pair):
    graph, subset = pair
    for ctor in (dgame, sgame):
        assert solve(graph, ctor(subset)).value <= solve(graph, ctor()).value
        for v in subset:
            assert solve(graph, ctor(subset)).value <= solve(graph, ctor([v])).value


@PROPERTY_SETTINGS
@given(connected_graphs(max_order=7))
def test_start_player_changes_value_by_at_most_one(graph):
    assert abs(solve(graph, dgame()).value - solve(graph, sgame()).value) <= 1


@PROPERTY_SETTINGS
@given(connected_graphs(max_order=7))
def test_single_predomination_lowers_by_at_most_two(graph):
    g = solve(graph, dgame()).value
    for v in range(graph.order):
        assert g - 2 <= solve(graph, dgame([v])).value <= g


@PROPERTY_SETTINGS
@given(connected_graphs(max_order=7))
def test_game_value_against_total_domination(graph):
    gamma = total_domination_number(graph)
    assert gamma <= solve(graph, dgame()).value <= 2 * gamma - 1


@PROPERTY_SETTINGS
@given(connected_graphs(min_order=3, max_order=7))
def test_vertex_removal_costs_at_most_four(graph):
    g, g_s = solve(graph, dgame()).value, solve(graph, sgame()).value
    for v in removable_vertices(graph):
        smaller = remove_vertex(graph, v)
        assert g <= solve(smaller, dgame()).value + 4
        assert g_s <= solve(smaller, sgame()).value + 4


@PROPERTY_SETTINGS
@given(connected_graphs(max_order=6))
def test_pass_options_help_their_owner(graph):
    for first in (Player.DOMINATOR, Player.STALLER):
        plain = solve(graph, dgame() if first is Player.DOMINATOR else sgame()).value
        assert solve(graph, staller_pass(first)).value >= plain
        assert solve(graph, dominator_pass(first)).value <= plain


@PROPERTY_SETTINGS
@given(connected_graphs(max_order=6))
def test_staller_pass_is_worth_at_most_one_move(graph):
    assert solve(graph, staller_pass(Player.STALLER)).value <= 1 + solve(graph, sgame()).value
    for u in range(graph.order):
        with_pass = solve(graph, staller_pass(Player.DOMINATOR, [u])).value
        assert with_pass <= solve(graph, dgame([u])).value + 1


def test_oracle_cap():
    with pytest.raises(OracleCapError):
        oracle_solve(build_cycle(13), dgame())
    assert oracle_solve(build_cycle(5), dgame(), max_order=5) == 3
