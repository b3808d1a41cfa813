"""
Shared fixtures and hypothesis strategies.

The project root goes on sys.path the same way the launcher does it, so
tests import `src.*` without an install step.
"""

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.config.settings import PROPERTY_GRAPH_ORDERS  # noqa: E402
from src.graph.core import Graph  # noqa: E402
from src.graph.families import build_cycle, build_path  # noqa: E402

PROPERTY_SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
# solver against oracle: a fixed sample of 200 graphs
ORACLE_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
ORACLE_ORDERS = (min(PROPERTY_GRAPH_ORDERS), max(PROPERTY_GRAPH_ORDERS))


@st.composite
def connected_graphs(draw, min_order: int = 2, max_order: int = 6) -> Graph:
    """Random spanning tree plus random extra edges"""
    order = draw(st.integers(min_order, max_order))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, order)}
    pairs = [(a, b) for a in range(order) for b in range(a + 1, order) if (a, b) not in edges]
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges |= {pair for pair, keep in zip(pairs, extra) if keep}
    return Graph.from_edges(order, sorted(edges))


@st.composite
def graphs_with_subset(draw, max_order: int = 6):
    graph = draw(connected_graphs(max_order=max_order))
    subset = draw(st.lists(st.integers(0, graph.order - 1), unique=True, max_size=graph.order))
    return graph, sorted(subset)


@pytest.fixture
def c8() -> Graph:
    return build_cycle(8)


@pytest.fixture
def p3() -> Graph:
    return build_path(3)
