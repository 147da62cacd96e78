"""Tests for the checker registry and the concurrent suite runner."""
import time
from unittest.mock import AsyncMock, patch

import pytest
from pydantic import ValidationError

from polyeuler.theorem_verifier import suite
from polyeuler.theorem_verifier.report import VerifyReport
from polyeuler.theorem_verifier.suite import THEOREMS, SweepRanges, resolve, run_suite, suite_passed


def _report(theorem_id, passed=True, expected_fail=False):
    return VerifyReport(theorem_id=theorem_id, range={}, passed=passed, expected_fail=expected_fail)


@pytest.fixture
def small_ranges():
    return SweepRanges(nmax=4, kmax=2, pmax=5, Nmax=1)


class TestRegistry:
    def test_fixed_order(self):
        assert list(THEOREMS) == [
            "recurrence-e2",
            "denominator",
            "sum1",
            "duality",
            "pb-expansion",
            "positivity",
            "congruences",
            "products",
            "oracle",
        ]

    def test_resolve_all(self):
        assert resolve("all") == list(THEOREMS)

    def test_resolve_unknown(self):
        with pytest.raises(KeyError):
            resolve("riemann")

    def test_ranges_from_settings(self, monkeypatch):
        monkeypatch.setenv("POLYEULER_VERIFY_NMAX", "6")
        assert SweepRanges.defaults().nmax == 6

    def test_ranges_validated(self):
        with pytest.raises(ValidationError):
            SweepRanges(nmax=4, kmax=2, pmax=2, Nmax=1)

    def test_zero_bounds_allowed(self):
        ranges = SweepRanges(nmax=0, kmax=0, pmax=3, Nmax=0)
        assert (ranges.nmax, ranges.Nmax) == (0, 0)


class TestSuitePassed:
    def test_expected_failures_do_not_fail_suite(self):
        assert suite_passed([_report("a"), _report("b", passed=False, expected_fail=True)])

    def test_real_failure(self):
        assert not suite_passed([_report("a"), _report("b", passed=False)])


class TestRunSuite:
    async def test_runs_every_checker_in_order(self, small_ranges):
        with patch.object(suite, "track_event", new=AsyncMock()) as tracked:
            reports = await run_suite(list(THEOREMS), small_ranges, workers=3)
        assert [r.theorem_id for r in reports] == list(THEOREMS)
        assert suite_passed(reports)
        assert tracked.await_count == len(THEOREMS)

    async def test_order_independent_of_completion(self, monkeypatch, small_ranges):
        def slow(ranges):
            time.sleep(0.2)
            return _report("slow")

        def fast(ranges):
            return _report("fast")

        monkeypatch.setitem(THEOREMS, "slow", slow)
        monkeypatch.setitem(THEOREMS, "fast", fast)
        reports = await run_suite(["slow", "fast"], small_ranges, workers=2)
        assert [r.theorem_id for r in reports] == ["slow", "fast"]

    async def test_worker_count_does_not_change_outcome(self, small_ranges):
        serial = await run_suite(["duality", "congruences"], small_ranges, workers=1)
        parallel = await run_suite(["duality", "congruences"], small_ranges, workers=4)
        assert [r.outcome() for r in serial] == [r.outcome() for r in parallel]
