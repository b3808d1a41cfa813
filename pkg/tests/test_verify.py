import json

import pytest

from src.config.settings import ResourceLimits
from src.game.variants import dgame, sgame
from src.graph.families import build_cycle, build_path
from src.solver.minimax import ResourceLimitError
from src.utils.errors import UsageError
from src.verify.bundle import ReportBundle, run_all
from src.verify.claims import (
    CSV_COLUMNS,
    ClaimCheck,
    ClaimReport,
    ClaimRunner,
    ClaimStatus,
    ValueCache,
    at_least,
    equals,
    holds,
    observed,
    out_of_hypothesis,
)
from src.verify.suites import (
    SUITE_REGISTRY,
    attachment_expected,
    cycle_game_value,
    removable_vertices,
    suite_cycle_closed_forms,
    suite_difference_families,
    suite_two_predominated,
    suite_variant_lemmas,
    two_predominated_expected,
)


@pytest.fixture
def cache():
    return ValueCache()


class TestClaimCheck:
    def test_equals(self, cache):
        c8 = build_cycle(8)
        assert equals("a", "l", 5, lambda c: c.value(c8, dgame())).run(cache).status is ClaimStatus.PASS
        report = equals("b", "l", 6, lambda c: c.value(c8, dgame())).run(cache)
        assert report.status is ClaimStatus.FAIL
        assert report.computed == 5
        assert report.expected == "== 6"

    def test_at_least_and_holds(self, cache):
        assert at_least("a", "l", 3, lambda c: 3).run(cache).status is ClaimStatus.PASS
        check = holds("b", "l", "x < y", lambda c: {"x": 1, "y": 2}, lambda v: v["x"] < v["y"])
        report = check.run(cache)
        assert report.status is ClaimStatus.PASS
        assert report.computed == {"x": 1, "y": 2}

    def test_mismatch_status(self, cache):
        check = equals("a", "l", 1, lambda c: 2, on_mismatch=ClaimStatus.DISCREPANCY)
        report = check.run(cache)
        assert report.status is ClaimStatus.DISCREPANCY
        assert not report.status.is_failure

    def test_observed_never_fails(self, cache):
        report = observed("a", "l", "value", lambda c: 42).run(cache)
        assert report.status is ClaimStatus.OBSERVED
        assert report.computed == 42

    def test_out_of_hypothesis_is_not_evaluated(self, cache):
        report = out_of_hypothesis("a", "l", "== 1", "n must be even").run(cache)
        assert report.status is ClaimStatus.SKIPPED_HYPOTHESIS
        assert report.computed is None
        assert report.note == "n must be even"

    def test_resource_limit_skips(self, cache):
        def compute(c):
            raise ResourceLimitError("node budget of 1 exceeded")

        report = equals("a", "l", 1, compute).run(cache)
        assert report.status is ClaimStatus.SKIPPED
        assert "node budget" in report.note

    def test_other_errors_are_failures(self, cache):
        report = equals("a", "l", 1, lambda c: 1 // 0).run(cache)
        assert report.status is ClaimStatus.ERROR
        assert report.status.is_failure
        assert report.note.startswith("ZeroDivisionError")

    def test_report_rows(self):
        report = ClaimReport("a", "l", "== 1", {"x": 1, "y": 2}, ClaimStatus.PASS, 1.23456)
        assert report.csv_row() == ["a", "l", "== 1", "x=1;y=2", "pass", "1.235"]
        assert report.csv_row(timing=False)[-1] == ""
        assert report.to_dict(timing=False)["millis"] is None


class TestValueCache:
    def test_values_are_memoised(self, cache):
        c8 = build_cycle(8)
        assert cache.value(c8, dgame()) == 5
        assert cache.value(c8, sgame()) == 4
        assert len(cache._tables) == 1
        assert cache.value(c8, dgame()) == 5

    def test_total_domination(self, cache):
        p6 = build_path(6)
        assert cache.total_domination(p6) == 4
        assert cache.total_domination(p6, predominated=1 << 5) == 3

    def test_limits_propagate(self):
        cache = ValueCache(ResourceLimits(max_nodes=1))
        report = equals("a", "l", 5, lambda c: c.value(build_cycle(8), dgame())).run(cache)
        assert report.status is ClaimStatus.SKIPPED

    def test_clear(self, cache):
        cache.value(build_cycle(4), dgame())
        cache.clear()
        assert not cache._tables


def test_runner_keeps_declaration_order(cache):
    checks = [equals(f"c{n}", "l", cycle_game_value(n), lambda c, n=n: c.value(build_cycle(n), dgame())) for n in (8, 14)]
    checks += [observed(f"o{i}", "l", "i", lambda c, i=i: i) for i in range(6)]
    reports = ClaimRunner(cache, threads=4).run(checks)
    assert [r.claim_id for r in reports] == [c.claim_id for c in checks]
    assert reports[0].status is ClaimStatus.PASS and reports[1].status is ClaimStatus.PASS


class TestSuites:
    def test_closed_form_helpers(self):
        assert cycle_game_value(8) == 5
        assert cycle_game_value(14) == 9
        assert [two_predominated_expected(8, d) for d in (1, 2, 3, 4)] == [4, 3, 4, 5]
        assert attachment_expected(5, 4) == 7
        assert attachment_expected(5, 10) == 7
        assert attachment_expected(5, 1) == 6

    def test_hypothesis_gate(self):
        checks = suite_cycle_closed_forms([7, 8], seed=1)
        assert checks[0].claim_id == "cycle/n=7"
        assert not checks[0].in_hypothesis
        assert len(checks) == 1 + 7
        assert suite_two_predominated([9])[0].in_hypothesis is False

    def test_cycle_claims_hold(self, cache):
        reports = ClaimRunner(cache).run(suite_cycle_closed_forms([8], seed=3))
        assert all(r.status is ClaimStatus.PASS for r in reports)

    def test_path_claims(self, cache):
        checks = {c.claim_id: c for c in suite_difference_families([], zk_max=0)}
        with_end = checks["paths/n=6/gamma-t|end"].run(cache)
        assert with_end.status is ClaimStatus.PASS
        bare = checks["paths/n=6/gamma-t"].run(cache)
        assert bare.status is ClaimStatus.OBSERVED
        assert bare.computed == 4
        assert checks["z-core/gamma-t"].run(cache).status is ClaimStatus.PASS

    def test_removable_vertices(self):
        assert removable_vertices(build_path(4)) == [0, 3]
        assert removable_vertices(build_cycle(5)) == list(range(5))

    def test_registry(self):
        assert list(SUITE_REGISTRY) == [
            "cycle_closed_forms",
            "variant_lemmas",
            "gnm",
            "tilde",
            "two_predominated",
            "sandwich",
            "attachment_conjecture",
            "vertex_removal",
            "difference_families",
        ]


class TestBundle:
    def test_gnm_suite_passes(self):
        bundle = run_all("smoke", suites=["gnm"], timing=False)
        assert bundle.ok
        counts = bundle.counts()
        assert counts["fail"] == counts["error"] == 0
        assert counts["pass"] == len(bundle.reports)
        assert bundle.to_text().rstrip().endswith("all claims hold")

    def test_output_ignores_thread_count(self):
        one = run_all("smoke", seed=5, threads=1, timing=False, suites=["gnm"]).to_json()
        two = run_all("smoke", seed=5, threads=2, timing=False, suites=["gnm"]).to_json()
        assert one == two
        data = json.loads(one)
        assert data["seed"] == 5 and data["profile"] == "smoke"
        assert "threads" not in data

    def test_timing_keeps_metadata(self):
        bundle = ReportBundle("smoke", 1, 3, [ClaimReport("a", "l", "== 1", 1, ClaimStatus.PASS, 2.0)])
        data = bundle.to_dict()
        assert data["threads"] == 3
        assert data["reports"][0]["millis"] == 2.0

    def test_csv(self):
        bundle = ReportBundle("smoke", 1, 1, [ClaimReport("a", "l", "== 1", 2, ClaimStatus.FAIL, 1.0)], timing=False)
        lines = bundle.to_csv().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert lines[1] == "a,l,== 1,2,fail,"
        assert not bundle.ok
        assert "FAILED" in bundle.render("text")

    def test_bad_names(self):
        with pytest.raises(UsageError):
            run_all("nope")
        with pytest.raises(UsageError):
            run_all("smoke", suites=["nope"])


class TestShortfalls:
    def test_witness_fills_the_note(self, cache):
        check = at_least("a", "l", 3, lambda c: 2, on_mismatch=ClaimStatus.DISCREPANCY, witness=lambda c: "d0(1)")
        report = check.run(cache)
        assert report.status is ClaimStatus.DISCREPANCY
        assert report.note == "d0(1)"
        assert at_least("b", "l", 1, lambda c: 2, witness=lambda c: "unused").run(cache).note == ""

    def test_forced_pass_shortfall_carries_its_line(self, cache):
        checks = {c.claim_id: c for c in suite_variant_lemmas([8], [])}
        report = checks["lemmas/n=8/sdp/k=1,l=5"].run(cache)
        assert report.status is ClaimStatus.DISCREPANCY
        assert report.computed == 4
        assert report.note == "d0(1,7) s-pass d4(3,5) s1(0,2) d5(4,6)"
        assert checks["lemmas/n=8/sdp/k=1,l=1"].run(cache).status is ClaimStatus.PASS

    def test_lemma_suite_on_c8_has_no_failures(self, cache):
        reports = ClaimRunner(cache).run(suite_variant_lemmas([8], range(3, 9)))
        assert not [r.claim_id for r in reports if r.status.is_failure]
        assert {r.claim_id for r in reports if r.status is ClaimStatus.DISCREPANCY} == {
            "lemmas/n=8/sdp/k=1,l=5",
            "lemmas/n=8/sdp-predom/k=1,l=3",
            "lemmas/n=8/sdp-predom/k=1,l=5",
        }

    def test_z0_is_outside_the_family(self, cache):
        checks = {c.claim_id: c for c in suite_difference_families([], zk_max=0)}
        assert checks["zk/k=0/s"].run(cache).status is ClaimStatus.SKIPPED_HYPOTHESIS
        value = checks["zk/k=0/s-value"].run(cache)
        assert value.status is ClaimStatus.OBSERVED
        assert value.computed == 7
        assert not any(claim_id.startswith("zk/k=1") for claim_id in checks)


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["variant_lemmas", "difference_families"])
def test_quick_profile_suites_have_no_failures(suite):
    bundle = run_all("quick", suites=[suite], timing=False)
    assert [r.claim_id for r in bundle.failures] == []
    assert bundle.counts()["pass"] > 0
