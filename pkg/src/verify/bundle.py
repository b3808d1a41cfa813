#!/usr/bin/env python3
"""
TotDom Game Solver - Verification Bundle
Combinatorial Games Group

Runs the suites of a profile and renders the result as JSON, CSV or text.
The bundle records seed, profile and thread count; with timing off the
JSON is identical across thread counts.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from src.config.settings import DEFAULT_SEED, PROFILES, VERSION, ResourceLimits
from src.utils.errors import UsageError
from src.verify.claims import CSV_COLUMNS, ClaimReport, ClaimRunner, ClaimStatus, ValueCache
from src.verify.suites import SUITE_REGISTRY, build_checks

logger = logging.getLogger(__name__)


@dataclass
class ReportBundle:
    profile: str
    seed: int
    threads: int
    reports: List[ClaimReport] = field(default_factory=list)
    timing: bool = True

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in ClaimStatus}
        for report in self.reports:
            counts[report.status.value] += 1
        return counts

    @property
    def failures(self) -> List[ClaimReport]:
        return [r for r in self.reports if r.status.is_failure]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"version": VERSION, "profile": self.profile, "seed": self.seed}
        # run metadata, omitted together with timing
        if self.timing:
            data["threads"] = self.threads
        data["counts"] = self.counts()
        data["reports"] = [r.to_dict(self.timing) for r in self.reports]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for report in self.reports:
            writer.writerow(report.csv_row(self.timing))
        return out.getvalue()

    def to_text(self) -> str:
        lines = [f"profile {self.profile}, seed {self.seed}, {len(self.reports)} claims"]
        for report in self.reports:
            if report.status in (ClaimStatus.PASS, ClaimStatus.OBSERVED) and not report.note:
                continue
            detail = f" ({report.note})" if report.note else ""
            lines.append(f"  {report.status.value:<18} {report.claim_id}: expected {report.expected}, got {report.computed}{detail}")
        counts = ", ".join(f"{name} {count}" for name, count in self.counts().items() if count)
        lines.append(f"summary: {counts}")
        lines.append("all claims hold" if self.ok else f"{len(self.failures)} claim(s) FAILED")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def resolve_profile(name: str) -> Dict[str, Any]:
    if name not in PROFILES:
        raise UsageError(f"unknown profile {name!r} (known: {', '.join(PROFILES)})")
    return PROFILES[name]


def run_all(
    profile: str = "quick",
    seed: int = DEFAULT_SEED,
    threads: int = 1,
    timing: bool = True,
    limits: Optional[ResourceLimits] = None,
    suites: Sequence[str] = (),
) -> ReportBundle:
    params = resolve_profile(profile)
    unknown = [s for s in suites if s not in SUITE_REGISTRY]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")

    # claims run in parallel; each solve stays single-threaded
    cache = ValueCache(ResourceLimits(limits.max_nodes, limits.max_table, 1) if limits else None)
    checks = build_checks(params, seed, suites)
    logger.info("verifying %d claims (profile %s, seed %d, %d threads)", len(checks), profile, seed, threads)
    reports = ClaimRunner(cache, threads).run(checks)

    bundle = ReportBundle(profile, seed, threads, reports, timing)
    logger.info("verification finished: %s", bundle.counts())
    return bundle
