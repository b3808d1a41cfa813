#!/usr/bin/env python3
"""
TotDom Game Solver - Graph Core
Combinatorial Games Group

Immutable undirected simple graphs stored as open-neighbourhood bitmasks,
plus the VertexSet value type used everywhere a set of vertices travels
between modules. Bit i of a mask stands for vertex i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from src.utils.errors import ToolkitError

VertexRef = Union[int, str]


class GraphError(ToolkitError):
    """Graph construction or lookup errors"""

    pass


class InvalidOrderError(GraphError):
    """A family parameter (n, m, k) is out of range"""

    pass


class InvalidDistanceError(GraphError):
    """Distance between attachment vertices is out of range"""

    pass


class InvalidLandmarksError(GraphError):
    """Landmark vertices are missing, equal or out of range"""

    pass


class InvalidVertexError(GraphError):
    """A vertex reference does not name a vertex of the graph"""

    pass


class IsolatedVertexError(GraphError):
    """The operation would leave a vertex without neighbours"""

    pass


class GraphFormatError(GraphError):
    """Malformed edge-list text (bad line, loop, duplicate edge, ...)"""

    pass


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class VertexSet:
    """Immutable set of vertex indices backed by a bitmask"""

    __slots__ = ("_mask",)

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise ValueError("vertex mask must be non-negative")
        self._mask = mask

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        vertices = list(vertices)
        if any(v < 0 for v in vertices):
            raise InvalidVertexError(f"negative vertex index in {vertices}")
        return cls(mask_of(vertices))

    @property
    def mask(self) -> int:
        return self._mask

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self._mask)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __contains__(self, vertex: object) -> bool:
        return isinstance(vertex, int) and vertex >= 0 and bool(self._mask >> vertex & 1)

    def __bool__(self) -> bool:
        return self._mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask | other._mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask & other._mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask & ~other._mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self._mask & ~other._mask == 0

    def max_index(self) -> int:
        return self._mask.bit_length() - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self._mask == other._mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._mask)

    def to_list(self) -> List[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Undirected simple graph on vertices 0..order-1.

    neighbourhoods[i] is the open neighbourhood N(i) as a bitmask. Landmarks
    map role names ("u1", "w1", "x", ...) to vertex indices. index_map is
    only set on graphs produced by remove_vertex and maps old indices to new.
    """

    order: int
    neighbourhoods: Tuple[int, ...]
    landmarks: Mapping[str, int] = field(default_factory=dict)
    index_map: Optional[Mapping[int, int]] = None

    def __post_init__(self):
        if self.order < 1:
            raise InvalidOrderError("a graph needs at least one vertex")
        if len(self.neighbourhoods) != self.order:
            raise GraphError("one neighbourhood per vertex expected")
        full = (1 << self.order) - 1
        for v, nb in enumerate(self.neighbourhoods):
            if nb & ~full:
                raise InvalidVertexError(f"vertex {v} has a neighbour outside the graph")
            if nb >> v & 1:
                raise GraphFormatError(f"loop at vertex {v}")
            if nb == 0:
                raise IsolatedVertexError(f"vertex {v} is isolated")
            for w in iter_bits(nb):
                if not self.neighbourhoods[w] >> v & 1:
                    raise GraphError(f"adjacency not symmetric between {v} and {w}")
        for name, v in self.landmarks.items():
            if not 0 <= v < self.order:
                raise InvalidLandmarksError(f"landmark {name!r} -> {v} is not a vertex")
        object.__setattr__(self, "landmarks", dict(self.landmarks))

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[Tuple[int, int]],
        landmarks: Optional[Mapping[str, int]] = None,
    ) -> "Graph":
        """Build from an edge list; duplicate edges are merged, loops rejected"""
        if order < 1:
            raise InvalidOrderError(f"order must be positive, got {order}")
        nbs = [0] * order
        for a, b in edges:
            if not (0 <= a < order and 0 <= b < order):
                raise InvalidVertexError(f"edge ({a}, {b}) outside 0..{order - 1}")
            if a == b:
                raise GraphFormatError(f"loop at vertex {a}")
            nbs[a] |= 1 << b
            nbs[b] |= 1 << a
        return cls(order, tuple(nbs), dict(landmarks or {}))

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbours(self, v: int) -> VertexSet:
        return VertexSet(self.neighbourhoods[v])

    def degree(self, v: int) -> int:
        return self.neighbourhoods[v].bit_count()

    def degrees(self) -> List[int]:
        return [nb.bit_count() for nb in self.neighbourhoods]

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.neighbourhoods[a] >> b & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (i, j) with i < j in lexicographic order"""
        return [(a, b) for a in range(self.order) for b in iter_bits(self.neighbourhoods[a]) if a < b]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def vertex(self, ref: VertexRef) -> int:
        """Resolve a landmark name or an index (int or digit string)"""
        if isinstance(ref, str):
            text = ref.strip()
            if text in self.landmarks:
                return self.landmarks[text]
            if text.lstrip("-").isdigit():
                ref = int(text)
            else:
                raise InvalidVertexError(f"unknown landmark {text!r}")
        if isinstance(ref, bool) or not isinstance(ref, int) or not 0 <= ref < self.order:
            raise InvalidVertexError(f"{ref!r} is not a vertex of a graph of order {self.order}")
        return ref

    def vertex_set(self, refs: Iterable[VertexRef]) -> VertexSet:
        return VertexSet(mask_of(self.vertex(r) for r in refs))

    def name_of(self, v: int) -> str:
        """Landmark name for display, or the index itself"""
        for name, idx in sorted(self.landmarks.items()):
            if idx == v:
                return name
        return str(v)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph, landmarks: Optional[Mapping[str, int]] = None) -> "Graph":
        """Relabel nodes to 0..n-1 in sorted order"""
        nodes = sorted(g.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in g.edges()), landmarks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.neighbourhoods == other.neighbourhoods

    def __hash__(self) -> int:
        return hash((self.order, self.neighbourhoods))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"


def induced_subgraph(graph: Graph, keep: Sequence[int]) -> Graph:
    """
    Subgraph induced on `keep` (ascending), reindexed 0..len(keep)-1. Landmarks
    on dropped vertices are dropped; index_map records old -> new.
    """
    keep = sorted(set(keep))
    for v in keep:
        graph.vertex(v)
    new_index: Dict[int, int] = {old: new for new, old in enumerate(keep)}
    edges = [(new_index[a], new_index[b]) for a, b in graph.edges() if a in new_index and b in new_index]
    nbs = [0] * len(keep)
    for a, b in edges:
        nbs[a] |= 1 << b
        nbs[b] |= 1 << a
    for old, nb in zip(keep, nbs):
        if nb == 0:
            raise IsolatedVertexError(f"vertex {old} would be isolated")
    landmarks = {name: new_index[v] for name, v in graph.landmarks.items() if v in new_index}
    return Graph(len(keep), tuple(nbs), landmarks, new_index)


def remove_vertex(graph: Graph, ref: VertexRef) -> Graph:
    """G - v; refuses to create isolated vertices since the game is undefined there"""
    v = graph.vertex(ref)
    if graph.order == 1:
        raise IsolatedVertexError("cannot remove the only vertex")
    return induced_subgraph(graph, [u for u in range(graph.order) if u != v])
