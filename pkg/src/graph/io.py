#!/usr/bin/env python3
"""
TotDom Game Solver - Graph I/O
Combinatorial Games Group

Edge-list text codec and the family DSL used on the command line.

Edge-list format:
    first non-comment line: n
    then one "i j" pair per line (0-based, whitespace separated)
    optional "#landmark name index" lines anywhere; other "#" lines are comments
"""

from pathlib import Path
from typing import Callable, Dict, List, Set, Tuple

from src.graph.core import Graph, GraphFormatError
from src.graph import families

LANDMARK_TAG = "#landmark"


def parse_graph(text: str) -> Graph:
    order = None
    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    landmarks: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line.split()
            if parts[0] == LANDMARK_TAG:
                if len(parts) != 3 or not parts[2].isdigit():
                    raise GraphFormatError(f"line {lineno}: expected '#landmark name index'")
                landmarks[parts[1]] = int(parts[2])
            continue

        parts = line.split()
        if order is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise GraphFormatError(f"line {lineno}: expected the vertex count")
            order = int(parts[0])
            if order < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            continue

        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"line {lineno}: expected 'i j', got {line!r}")
        a, b = int(parts[0]), int(parts[1])
        if a == b:
            raise GraphFormatError(f"line {lineno}: loop at vertex {a}")
        if a >= order or b >= order:
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{order - 1}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)

    if order is None:
        raise GraphFormatError("empty graph text")
    for name, v in landmarks.items():
        if v >= order:
            raise GraphFormatError(f"landmark {name!r} -> {v} is not a vertex")
    return Graph.from_edges(order, edges, landmarks)


def serialize_graph(graph: Graph) -> str:
    """Canonical text: sorted edges, then landmarks sorted by name"""
    lines = [str(graph.order)]
    lines.extend(f"{a} {b}" for a, b in graph.edges())
    lines.extend(f"{LANDMARK_TAG} {name} {v}" for name, v in sorted(graph.landmarks.items()))
    return "\n".join(lines) + "\n"


def read_graph_file(path: Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"cannot read graph file {path}: {e}") from e
    return parse_graph(text)


def write_graph_file(graph: Graph, path: Path) -> None:
    Path(path).write_text(serialize_graph(graph), encoding="utf-8")


def _params(body: str) -> Dict[str, int]:
    params: Dict[str, int] = {}
    if not body:
        return params
    for item in body.split(","):
        key, sep, value = item.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value.lstrip("-").isdigit():
            raise GraphFormatError(f"bad family parameter {item!r}")
        params[key] = int(value)
    return params


FAMILY_BUILDERS: Dict[str, Tuple[Tuple[str, ...], Callable[..., Graph]]] = {
    "cycle": (("n",), families.build_cycle),
    "path": (("n",), families.build_path),
    "complete": (("n",), families.build_complete),
    "gndm": (("n", "d", "m"), families.build_gndm),
    "hm": (("m",), families.build_hm),
    "tilde": (("n", "m"), families.build_tilde),
    "kleaves": (("k",), families.build_k_leaves),
    "zk": (("k",), families.build_zk),
    "zcore": ((), lambda: families.build_z_core()),
}


def parse_family(spec: str) -> Graph:
    """
    Build a graph from a DSL string such as "gndm:n=14,d=4,m=4", "zcore",
    "join:path:n=6", "join:<file>" or "file:<path>".
    """
    spec = spec.strip()
    kind, _, body = spec.partition(":")
    kind = kind.strip().lower()

    if kind == "file":
        if not body:
            raise GraphFormatError("file: needs a path")
        return read_graph_file(Path(body))

    if kind == "join":
        if not body:
            raise GraphFormatError("join: needs an inner graph")
        inner_kind = body.partition(":")[0].strip().lower()
        if inner_kind in FAMILY_BUILDERS or inner_kind in ("join", "file"):
            return families.join_universal(parse_family(body))
        return families.join_universal(read_graph_file(Path(body)))

    if kind not in FAMILY_BUILDERS:
        known = ", ".join(sorted(list(FAMILY_BUILDERS) + ["join", "file"]))
        raise GraphFormatError(f"unknown family {kind!r} (known: {known})")

    names, builder = FAMILY_BUILDERS[kind]
    params = _params(body)
    missing = [n for n in names if n not in params]
    extra = [k for k in params if k not in names]
    if missing or extra:
        raise GraphFormatError(
            f"family {kind!r} takes {', '.join(names) or 'no parameters'}"
            f" (missing: {missing or '-'}, unexpected: {extra or '-'})"
        )
    return builder(*(params[n] for n in names))
