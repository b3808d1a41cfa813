import networkx as nx
import pytest
from hypothesis import given

from src.graph.core import (
    Graph,
    GraphError,
    GraphFormatError,
    InvalidVertexError,
    IsolatedVertexError,
    VertexSet,
    induced_subgraph,
    iter_bits,
    mask_of,
    remove_vertex,
)
from src.graph.families import build_cycle, build_path
from tests.conftest import PROPERTY_SETTINGS, connected_graphs


class TestVertexSet:
    def test_set_operations(self):
        a = VertexSet.of([0, 2, 5])
        b = VertexSet.of([2, 3])
        assert (a | b).to_list() == [0, 2, 3, 5]
        assert (a & b).to_list() == [2]
        assert (a - b).to_list() == [0, 5]
        assert len(a) == 3
        assert 5 in a and 4 not in a
        assert VertexSet.of([2]).issubset(a)
        assert a.max_index() == 5

    def test_negative_vertex_rejected(self):
        with pytest.raises(InvalidVertexError):
            VertexSet.of([-1])

    def test_equality_and_hash(self):
        assert VertexSet.of([1, 3]) == VertexSet(0b1010)
        assert len({VertexSet.of([1, 3]), VertexSet(0b1010)}) == 1
        assert not VertexSet()


def test_bit_helpers():
    assert mask_of([0, 3]) == 0b1001
    assert list(iter_bits(0b10110)) == [1, 2, 4]


class TestGraph:
    def test_from_edges_builds_neighbourhoods(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.neighbourhoods == (0b010, 0b101, 0b010)
        assert g.degrees() == [1, 2, 1]
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.edge_count == 2

    def test_duplicate_edges_merge(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0)])
        assert g.edge_count == 1

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError):
            Graph.from_edges(2, [(0, 1), (1, 1)])

    def test_isolated_vertex_rejected(self):
        with pytest.raises(IsolatedVertexError):
            Graph.from_edges(3, [(0, 1)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(GraphError):
            Graph(3, (0b010, 0b001, 0b001), {})

    def test_vertex_resolves_landmarks_and_indices(self):
        c = build_cycle(8)
        assert c.vertex("u5") == 4
        assert c.vertex("3") == 3
        assert c.vertex(7) == 7
        with pytest.raises(InvalidVertexError):
            c.vertex("w1")
        with pytest.raises(InvalidVertexError):
            c.vertex(8)

    def test_name_of(self):
        c = build_cycle(8)
        assert c.name_of(0) == "u1"
        g = Graph.from_edges(2, [(0, 1)])
        assert g.name_of(1) == "1"

    def test_equality_ignores_landmarks(self):
        a = build_cycle(5)
        b = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert a == b
        assert hash(a) == hash(b)

    def test_networkx_round_trip(self):
        g = nx.petersen_graph()
        ours = Graph.from_networkx(g)
        assert ours.order == 10
        assert ours.edge_count == 15
        assert nx.is_isomorphic(ours.to_networkx(), g)


class TestRemoval:
    def test_remove_path_end(self):
        p = build_path(6)
        q = remove_vertex(p, "end")
        assert q == build_path(5)
        assert q.index_map[4] == 4
        assert 5 not in q.index_map
        assert "end" not in q.landmarks

    def test_remove_reindexes(self):
        c = build_cycle(6)
        p = remove_vertex(c, "u1")
        assert p.order == 5
        assert p.index_map == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4}
        assert p.landmarks["u2"] == 0
        assert p.degrees() == [1, 2, 2, 2, 1]

    def test_removal_that_isolates_is_rejected(self):
        with pytest.raises(IsolatedVertexError):
            remove_vertex(build_path(3), 1)

    def test_induced_subgraph(self):
        c = build_cycle(6)
        sub = induced_subgraph(c, [0, 1, 2])
        assert sub.edges() == [(0, 1), (1, 2)]


@PROPERTY_SETTINGS
@given(connected_graphs(min_order=2, max_order=8))
def test_edges_and_neighbourhoods_agree(graph):
    for a, b in graph.edges():
        assert graph.has_edge(a, b) and graph.has_edge(b, a)
    assert sum(graph.degrees()) == 2 * len(graph.edges())
    assert nx.is_connected(graph.to_networkx())
