#!/usr/bin/env python3
"""
TotDom Game Solver - Graph Package
Combinatorial Games Group

Graph core types, named families and the text codec.
"""

from src.graph.core import (
    Graph,
    VertexSet,
    VertexRef,
    GraphError,
    InvalidOrderError,
    InvalidDistanceError,
    InvalidLandmarksError,
    InvalidVertexError,
    IsolatedVertexError,
    GraphFormatError,
    mask_of,
    iter_bits,
    popcount,
    induced_subgraph,
    remove_vertex,
)
from src.graph.families import (
    build_cycle,
    build_path,
    build_complete,
    build_gndm,
    build_hm,
    build_tilde,
    build_k_leaves,
    build_zk,
    build_z_core,
    attach_complete,
    join_universal,
    cycle_distance,
    random_connected_graph,
    random_graph_sample,
)
from src.graph.io import parse_graph, serialize_graph, parse_family, read_graph_file, write_graph_file

__all__ = [
    "Graph",
    "VertexSet",
    "VertexRef",
    "GraphError",
    "InvalidOrderError",
    "InvalidDistanceError",
    "InvalidLandmarksError",
    "InvalidVertexError",
    "IsolatedVertexError",
    "GraphFormatError",
    "mask_of",
    "iter_bits",
    "popcount",
    "induced_subgraph",
    "remove_vertex",
    "build_cycle",
    "build_path",
    "build_complete",
    "build_gndm",
    "build_hm",
    "build_tilde",
    "build_k_leaves",
    "build_zk",
    "build_z_core",
    "attach_complete",
    "join_universal",
    "cycle_distance",
    "random_connected_graph",
    "random_graph_sample",
    "parse_graph",
    "serialize_graph",
    "parse_family",
    "read_graph_file",
    "write_graph_file",
]
