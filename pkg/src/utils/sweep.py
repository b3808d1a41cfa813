#!/usr/bin/env python3
"""
TotDom Game Solver - Parameter Sweeps
Combinatorial Games Group

Solves one variant over the Cartesian grid of a family's parameters, e.g.

    family "gndm", grid "n=8|14,d=1..n/2,m=4", variant "d"

Alternatives are separated by '|', ranges are inclusive and a range bound
may name an earlier parameter ("n", "n/2"). Rows run in a process pool and
every finished row is appended to the journal, so a rerun with the same
journal only solves what is missing. Rows come out in grid order whatever
the pool does.
"""

import csv
import io
import json
import logging
import re
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from src.config.settings import ResourceLimits
from src.game.variants import VariantError, parse_variant
from src.graph.core import GraphError
from src.graph.io import FAMILY_BUILDERS, parse_family
from src.solver.minimax import GameSolver, ResourceLimitError
from src.utils.errors import UsageError
from src.utils.journal import Journal

logger = logging.getLogger(__name__)

ROW_COLUMNS = ("key", "graph", "variant", "value", "status", "nodes", "table_entries", "millis", "note")

_BOUND = re.compile(r"^\s*(?:(-?\d+)|([A-Za-z_]\w*)(?:\s*/\s*(\d+))?)\s*$")


@dataclass(frozen=True)
class SweepTask:
    index: int
    graph: str
    variant: str

    @property
    def key(self) -> str:
        return f"{self.graph}|{self.variant}"


def _bound(text: str, bound: Dict[str, int]) -> int:
    match = _BOUND.match(text)
    if not match:
        raise UsageError(f"bad range bound {text!r}")
    number, name, divisor = match.groups()
    if number is not None:
        return int(number)
    if name not in bound:
        raise UsageError(f"range bound {name!r} refers to a parameter not set yet")
    value = bound[name]
    return value // int(divisor) if divisor else value


def _values(text: str, bound: Dict[str, int]) -> List[int]:
    values: List[int] = []
    for alt in text.split("|"):
        alt = alt.strip()
        if not alt:
            raise UsageError(f"empty alternative in {text!r}")
        if ".." in alt:
            lo, _, hi = alt.partition("..")
            values.extend(range(_bound(lo, bound), _bound(hi, bound) + 1))
        else:
            values.append(_bound(alt, bound))
    return values


def parse_grid(text: str) -> List[Tuple[str, str]]:
    """'n=8|14,d=1..n/2' -> [('n', '8|14'), ('d', '1..n/2')]"""
    items = []
    for item in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise UsageError(f"bad grid item {item!r}")
        items.append((key.strip(), value.strip()))
    return items


def expand_grid(items: Sequence[Tuple[str, str]]) -> Iterator[Dict[str, int]]:
    """Every assignment, earlier parameters varying slowest"""

    def walk(i: int, current: Dict[str, int]) -> Iterator[Dict[str, int]]:
        if i == len(items):
            yield dict(current)
            return
        key, text = items[i]
        for value in _values(text, current):
            current[key] = value
            yield from walk(i + 1, current)
        current.pop(key, None)

    yield from walk(0, {})


def build_tasks(family: str, grid: str, variants: Sequence[str]) -> List[SweepTask]:
    if family not in FAMILY_BUILDERS:
        raise UsageError(f"unknown family {family!r} (known: {', '.join(FAMILY_BUILDERS)})")
    tasks = []
    for params, variant in product(expand_grid(parse_grid(grid)), variants):
        graph = f"{family}:" + ",".join(f"{k}={v}" for k, v in params.items())
        tasks.append(SweepTask(len(tasks), graph, variant))
    return tasks


def solve_row(task: SweepTask, limits: ResourceLimits) -> Dict[str, Any]:
    """One row; never raises for bad instances or exhausted caps"""
    row: Dict[str, Any] = {column: None for column in ROW_COLUMNS}
    row.update(key=task.key, graph=task.graph, variant=task.variant, note="")
    try:
        graph = parse_family(task.graph)
        variant = parse_variant(task.variant, graph)
        result = GameSolver(graph, variant, limits).solve()
    except (GraphError, VariantError) as e:
        row.update(status="invalid", note=str(e))
    except ResourceLimitError as e:
        row.update(status="resource", nodes=e.stats.nodes, table_entries=e.stats.table_entries, note=str(e))
    else:
        row.update(
            status="ok",
            value=result.value,
            nodes=result.nodes,
            table_entries=result.table_entries,
            millis=round(result.millis, 3),
        )
    return row


def run_sweep(
    tasks: Sequence[SweepTask],
    limits: Optional[ResourceLimits] = None,
    journal_path: Optional[Path] = None,
    workers: int = 1,
) -> List[Dict[str, Any]]:
    limits = limits or ResourceLimits()
    journal = Journal(journal_path)
    done = journal.load()
    rows: Dict[int, Dict[str, Any]] = {}
    pending: List[SweepTask] = []
    for task in tasks:
        if task.key in done:
            rows[task.index] = done[task.key]
        else:
            pending.append(task)
    if done:
        logger.info("resuming sweep: %d of %d rows already in %s", len(rows), len(tasks), journal_path)

    # each row solves single-threaded; parallelism is across rows
    row_limits = ResourceLimits(limits.max_nodes, limits.max_table, 1)

    unjournaled: List[str] = []

    def finish(task: SweepTask, row: Dict[str, Any]) -> None:
        rows[task.index] = row
        if not journal.append(task.key, row):
            unjournaled.append(task.key)
        if row["status"] != "ok":
            logger.info("row %s: %s (%s)", task.key, row["status"], row["note"])

    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(solve_row, task, row_limits): task for task in pending}
            for future in as_completed(futures):
                finish(futures[future], future.result())
    else:
        for task in pending:
            finish(task, solve_row(task, row_limits))

    if unjournaled:
        logger.warning(
            "%d of %d rows missing from journal %s, a resumed sweep solves them again",
            len(unjournaled), len(pending), journal_path,
        )
    return [rows[task.index] for task in tasks]


def render_rows(rows: Sequence[Dict[str, Any]], fmt: str, timing: bool = True) -> str:
    if not timing:
        rows = [dict(row, millis=None) for row in rows]
    if fmt == "json":
        return json.dumps(list(rows), indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=ROW_COLUMNS, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: "" if row.get(k) is None else row.get(k) for k in ROW_COLUMNS})
        return out.getvalue()
    lines = []
    for row in rows:
        value = row["value"] if row["status"] == "ok" else row["status"]
        lines.append(f"{row['graph']:<28} {row['variant']:<16} {value}")
    return "\n".join(lines) + "\n"
