#!/usr/bin/env python3
"""
TotDom Game Solver - Claim Checks
Combinatorial Games Group

A ClaimCheck is one exact statement about game values, evaluated lazily
against a shared ValueCache. Running it never raises: the outcome is always
a ClaimReport whose status says what happened.
"""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple

from src.config.settings import ResourceLimits
from src.game.variants import VariantSpec
from src.graph.core import Graph
from src.solver.domination import total_domination_number
from src.solver.minimax import GameSolver, ResourceLimitError, TranspositionTable, format_line

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("claim_id", "locus", "expected", "computed", "status", "millis")


class ClaimStatus(Enum):
    """Outcome of one claim"""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    SKIPPED_HYPOTHESIS = "skipped-hypothesis"
    DISCREPANCY = "discrepancy"
    OBSERVED = "observed"
    ERROR = "error"

    @property
    def is_failure(self) -> bool:
        return self in (ClaimStatus.FAIL, ClaimStatus.ERROR)


@dataclass
class ClaimReport:
    """Result of a claim check"""

    claim_id: str
    locus: str
    expected: str
    computed: Any
    status: ClaimStatus
    millis: Optional[float] = None
    note: str = ""

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "locus": self.locus,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status.value,
            "millis": round(self.millis, 3) if timing and self.millis is not None else None,
            "note": self.note,
        }

    def csv_row(self, timing: bool = True) -> List[str]:
        computed = self.computed
        if isinstance(computed, dict):
            computed = ";".join(f"{k}={v}" for k, v in computed.items())
        millis = f"{self.millis:.3f}" if timing and self.millis is not None else ""
        return [self.claim_id, self.locus, self.expected, "" if computed is None else str(computed), self.status.value, millis]


class ValueCache:
    """
    Game values shared by every claim of a run. Plain variants on the same
    graph also share one transposition table, since plain-phase entries
    depend on the graph only.
    """

    def __init__(self, limits: Optional[ResourceLimits] = None):
        self.limits = limits or ResourceLimits()
        self._values: Dict[Hashable, int] = {}
        self._tables: Dict[Graph, TranspositionTable] = {}
        self._lock = threading.Lock()

    def _table(self, graph: Graph) -> TranspositionTable:
        with self._lock:
            return self._tables.setdefault(graph, TranspositionTable())

    def value(self, graph: Graph, variant: VariantSpec) -> int:
        key = ("game", graph, variant)
        with self._lock:
            if key in self._values:
                return self._values[key]
        table = self._table(graph) if variant.is_plain else None
        value = GameSolver(graph, variant, self.limits, table=table).solve().value
        with self._lock:
            return self._values.setdefault(key, value)

    def total_domination(self, graph: Graph, predominated: int = 0) -> int:
        key = ("gamma_t", graph, predominated)
        with self._lock:
            if key in self._values:
                return self._values[key]
        value = total_domination_number(graph, predominated=predominated)
        with self._lock:
            return self._values.setdefault(key, value)

    def line(self, graph: Graph, variant: VariantSpec) -> str:
        return format_line(GameSolver(graph, variant, self.limits).best_line())

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self._tables.clear()


Evaluation = Callable[[ValueCache], Tuple[Any, bool]]


@dataclass
class ClaimCheck:
    """
    One claim. `evaluate` returns (computed, holds). A claim outside its
    hypothesis is reported without being evaluated; `observe` claims only
    record what they computed. On a mismatch `witness`, when given, fills
    the note (usually with an optimal line).
    """

    claim_id: str
    locus: str
    expected: str
    evaluate: Evaluation
    in_hypothesis: bool = True
    on_mismatch: ClaimStatus = ClaimStatus.FAIL
    observe: bool = False
    note: str = ""
    witness: Optional[Callable[[ValueCache], str]] = None

    def run(self, cache: ValueCache) -> ClaimReport:
        if not self.in_hypothesis:
            return ClaimReport(self.claim_id, self.locus, self.expected, None, ClaimStatus.SKIPPED_HYPOTHESIS, None, self.note)

        start = time.perf_counter()
        note = self.note
        try:
            computed, holds = self.evaluate(cache)
            if self.observe:
                status = ClaimStatus.OBSERVED
            else:
                status = ClaimStatus.PASS if holds else self.on_mismatch
                if not holds and self.witness is not None:
                    note = self.witness(cache)
        except ResourceLimitError as e:
            computed, status, note = None, ClaimStatus.SKIPPED, str(e)
        except Exception as e:
            logger.error("claim %s raised %s: %s", self.claim_id, type(e).__name__, e)
            computed, status, note = None, ClaimStatus.ERROR, f"{type(e).__name__}: {e}"
        millis = (time.perf_counter() - start) * 1000.0
        logger.debug("claim %s: %s (%.1fms)", self.claim_id, status.value, millis)
        return ClaimReport(self.claim_id, self.locus, self.expected, computed, status, millis, note)


# ---- constructors ----------------------------------------------------------

def equals(claim_id: str, locus: str, expected: int, compute: Callable[[ValueCache], int], **kwargs) -> ClaimCheck:
    def evaluate(cache: ValueCache) -> Tuple[Any, bool]:
        value = compute(cache)
        return value, value == expected

    return ClaimCheck(claim_id, locus, f"== {expected}", evaluate, **kwargs)


def at_least(claim_id: str, locus: str, bound: int, compute: Callable[[ValueCache], int], **kwargs) -> ClaimCheck:
    def evaluate(cache: ValueCache) -> Tuple[Any, bool]:
        value = compute(cache)
        return value, value >= bound

    return ClaimCheck(claim_id, locus, f">= {bound}", evaluate, **kwargs)


def holds(
    claim_id: str,
    locus: str,
    expected: str,
    compute: Callable[[ValueCache], Dict[str, int]],
    predicate: Callable[[Dict[str, int]], bool],
    **kwargs,
) -> ClaimCheck:
    """Claim over several named values, e.g. a chain of inequalities"""

    def evaluate(cache: ValueCache) -> Tuple[Any, bool]:
        values = compute(cache)
        return values, predicate(values)

    return ClaimCheck(claim_id, locus, expected, evaluate, **kwargs)


def observed(claim_id: str, locus: str, what: str, compute: Callable[[ValueCache], Any], **kwargs) -> ClaimCheck:
    return ClaimCheck(claim_id, locus, what, lambda cache: (compute(cache), True), observe=True, **kwargs)


def out_of_hypothesis(claim_id: str, locus: str, expected: str, reason: str) -> ClaimCheck:
    return ClaimCheck(claim_id, locus, expected, lambda cache: (None, False), in_hypothesis=False, note=reason)


class ClaimRunner:
    """Runs claims on a thread pool; reports come back in declaration order"""

    def __init__(self, cache: Optional[ValueCache] = None, threads: int = 1):
        self.cache = cache or ValueCache()
        self.threads = max(1, threads)

    def run(self, checks: List[ClaimCheck]) -> List[ClaimReport]:
        if self.threads == 1 or len(checks) < 2:
            return [check.run(self.cache) for check in checks]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(lambda check: check.run(self.cache), checks))
