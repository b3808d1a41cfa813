#!/usr/bin/env python3
"""
TotDom Game Solver - Graph Families
Combinatorial Games Group

Builders for the named graph families. Vertex numbering is fixed so values
and transcripts are reproducible:

  cycle      u1..un -> 0..n-1 in cyclic order
  path       u1..un -> 0..n-1, plus "start" and "end"
  attach     H first, then w1, w2, v1..v(m-2) appended
  hm         u1=0, u5=1, w1=2, w2=3, v1..v(m-2)=4..
  tilde      cycle first, then w, v1..v(m-1)
  kleaves    u=0, v=1, x1..xk=2..k+1, y1..yk=k+2..2k+1
  zk         the 14 vertices of Z0 (see Z0_NAMES), then 5 vertices per path

Z0 is decoded from a drawing (the unnamed inner vertex is called a9 here);
its degree sequence is checked in the tests.
"""

import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from src.graph.core import (
    Graph,
    InvalidDistanceError,
    InvalidLandmarksError,
    InvalidOrderError,
    VertexRef,
    induced_subgraph,
)

logger = logging.getLogger(__name__)

Z0_NAMES = ("a1", "a2", "a3", "z", "a5", "a6", "a7", "a8", "a9", "x", "l1", "l2", "u", "v")

Z0_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 7), (7, 6), (6, 5), (5, 4), (4, 0),
    (1, 5), (2, 6),
    (8, 2), (8, 3), (8, 7),
    (3, 9), (9, 10), (9, 11), (9, 12), (12, 13),
)

Z_CORE_ORDER = 9
Z_PATH_LENGTH = 5


def cycle_distance(n: int, i: int, j: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def _cycle_edges(n: int) -> List[Tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def _clique_edges(vertices: Sequence[int]) -> List[Tuple[int, int]]:
    return [(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1:]]


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrderError(f"a cycle needs n >= 3, got {n}")
    landmarks = {f"u{i + 1}": i for i in range(n)}
    return Graph.from_edges(n, _cycle_edges(n), landmarks)


def build_path(n: int) -> Graph:
    if n < 2:
        raise InvalidOrderError(f"a path needs n >= 2, got {n}")
    landmarks = {f"u{i + 1}": i for i in range(n)}
    landmarks.update({"start": 0, "end": n - 1})
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], landmarks)


def build_complete(n: int) -> Graph:
    if n < 2:
        raise InvalidOrderError(f"a complete graph needs n >= 2, got {n}")
    return Graph.from_edges(n, _clique_edges(list(range(n))))


def attach_complete(host: Graph, a: VertexRef, b: VertexRef, m: int) -> Graph:
    """
    Join two host vertices a, b to both of w1, w2 of a new K_m.

    The result keeps the host's landmarks, then u1 -> a and u2 -> b override
    whatever those names meant in the host.
    """
    if m < 3:
        raise InvalidOrderError(f"the attached clique needs m >= 3, got {m}")
    ia, ib = host.vertex(a), host.vertex(b)
    if ia == ib:
        raise InvalidLandmarksError("attachment vertices must be distinct")
    n = host.order
    clique = list(range(n, n + m))
    w1, w2 = clique[0], clique[1]
    edges = host.edges() + _clique_edges(clique)
    edges += [(ia, w1), (ia, w2), (ib, w1), (ib, w2)]
    landmarks = dict(host.landmarks)
    landmarks.update({"u1": ia, "u2": ib, "w1": w1, "w2": w2})
    landmarks.update({f"v{i + 1}": v for i, v in enumerate(clique[2:])})
    return Graph.from_edges(n + m, edges, landmarks)


def build_gndm(n: int, d: int, m: int) -> Graph:
    """C_n with a K_m attached at u1 and the cycle vertex at distance d"""
    if n < 3:
        raise InvalidOrderError(f"a cycle needs n >= 3, got {n}")
    if m < 3:
        raise InvalidOrderError(f"the attached clique needs m >= 3, got {m}")
    if not 1 <= d <= n // 2:
        raise InvalidDistanceError(f"d must lie in 1..{n // 2}, got {d}")
    return attach_complete(build_cycle(n), 0, d, m)


def build_hm(m: int) -> Graph:
    if m < 3:
        raise InvalidOrderError(f"H_m needs m >= 3, got {m}")
    clique = list(range(2, m + 2))
    edges = _clique_edges(clique) + [(0, 2), (0, 3), (1, 2), (1, 3)]
    landmarks = {"u1": 0, "u5": 1, "w1": 2, "w2": 3}
    landmarks.update({f"v{i + 1}": v for i, v in enumerate(clique[2:])})
    return Graph.from_edges(m + 2, edges, landmarks)


def build_tilde(n: int, m: int) -> Graph:
    """C_n and K_m joined by the single bridge u1-w"""
    if n < 3 or m < 3:
        raise InvalidOrderError(f"tilde graph needs n, m >= 3, got n={n}, m={m}")
    clique = list(range(n, n + m))
    edges = _cycle_edges(n) + _clique_edges(clique) + [(0, n)]
    landmarks = {f"u{i + 1}": i for i in range(n)}
    landmarks["w"] = n
    landmarks.update({f"v{i + 1}": v for i, v in enumerate(clique[1:])})
    return Graph.from_edges(n + m, edges, landmarks)


def build_k_leaves(k: int) -> Graph:
    """K_{k+2} on u, v, x1..xk with a pendant y_i at each x_i"""
    if k < 1:
        raise InvalidOrderError(f"k must be >= 1, got {k}")
    core = list(range(k + 2))
    edges = _clique_edges(core) + [(1 + i, k + 1 + i) for i in range(1, k + 1)]
    landmarks = {"u": 0, "v": 1}
    for i in range(1, k + 1):
        landmarks[f"x{i}"] = 1 + i
        landmarks[f"y{i}"] = k + 1 + i
    return Graph.from_edges(2 * k + 2, edges, landmarks)


def build_zk(k: int) -> Graph:
    """Z0 with k paths of 5 new vertices hanging from x"""
    if k < 0:
        raise InvalidOrderError(f"k must be >= 0, got {k}")
    x = Z0_NAMES.index("x")
    edges = list(Z0_EDGES)
    landmarks: Dict[str, int] = {name: i for i, name in enumerate(Z0_NAMES)}
    base = len(Z0_NAMES)
    for j in range(k):
        first = base + Z_PATH_LENGTH * j
        path = list(range(first, first + Z_PATH_LENGTH))
        edges.append((x, path[0]))
        edges.extend(zip(path, path[1:]))
        landmarks[f"p{j + 1}"] = path[0]
    return Graph.from_edges(base + Z_PATH_LENGTH * k, edges, landmarks)


def build_z_core() -> Graph:
    """Z0 without x, its two leaves, u and v"""
    core = induced_subgraph(build_zk(0), range(Z_CORE_ORDER))
    return Graph(core.order, core.neighbourhoods, core.landmarks)


def join_universal(host: Graph) -> Graph:
    """Add a vertex v adjacent to every vertex of host"""
    n = host.order
    edges = host.edges() + [(i, n) for i in range(n)]
    landmarks = dict(host.landmarks)
    landmarks["v"] = n
    return Graph.from_edges(n + 1, edges, landmarks)


def random_connected_graph(order: int, rng: random.Random, p: float = 0.5) -> Graph:
    """G(n, p) resampled until connected"""
    if order < 2:
        raise InvalidOrderError(f"random graphs need order >= 2, got {order}")
    attempts = 0
    while True:
        attempts += 1
        g = nx.erdos_renyi_graph(order, p, seed=rng.randrange(2**32))
        if nx.is_connected(g):
            if attempts > 50:
                logger.debug("connected G(%d, %.2f) after %d draws", order, p, attempts)
            return Graph.from_networkx(g)


def random_graph_sample(
    count: int, orders: Sequence[int], seed: int, p: Optional[float] = None
) -> List[Graph]:
    """Deterministic sample: order cycles through `orders`, edge probability varies"""
    rng = random.Random(seed)
    graphs = []
    for i in range(count):
        order = orders[i % len(orders)]
        prob = p if p is not None else rng.choice((0.35, 0.5, 0.65))
        graphs.append(random_connected_graph(order, rng, prob))
    return graphs
