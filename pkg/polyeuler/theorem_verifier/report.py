"""Verification reports and the sweep runner that produces them."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..shared.rationals import canonical
from ..shared.seq_logging import log_claim_result, log_sweep_started

Value = Union[int, Fraction]


class Counterexample(BaseModel):
    params: Dict[str, int]
    lhs: str
    rhs: str


class VerifyReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    theorem_id: str
    swept_range: Dict[str, int] = Field(alias="range")
    passed: bool
    expected_fail: bool = False
    counterexample: Optional[Counterexample] = None
    elapsed_ms: float = 0.0
    subclaims: List["VerifyReport"] = Field(default_factory=list)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)

    def outcome(self) -> dict:
        """Everything except timing; equal across reruns of the same sweep."""
        data = self.model_dump(by_alias=True, exclude={"elapsed_ms"})
        data["subclaims"] = [sub.outcome() for sub in self.subclaims]
        return data

    def find(self, theorem_id: str) -> "VerifyReport":
        """Sub-claim by id (or self)."""
        if self.theorem_id == theorem_id:
            return self
        for sub in self.subclaims:
            try:
                return sub.find(theorem_id)
            except KeyError:
                continue
        raise KeyError(theorem_id)


@dataclass(frozen=True)
class Case:
    """One instance of a claim: parameters, both sides, and whether it holds."""

    params: Dict[str, int]
    lhs: Value
    rhs: Value
    holds: bool


def equal_case(params: Dict[str, int], lhs: Value, rhs: Value) -> Case:
    return Case(params, lhs, rhs, Fraction(lhs) == Fraction(rhs))


def congruent_case(params: Dict[str, int], lhs: int, rhs: int, modulus: int) -> Case:
    return Case(params, lhs, rhs, (lhs - rhs) % modulus == 0)


def at_least_case(params: Dict[str, int], lhs: Value, rhs: Value) -> Case:
    return Case(params, lhs, rhs, Fraction(lhs) >= Fraction(rhs))


def run_claim(
    theorem_id: str,
    swept_range: Dict[str, int],
    cases: Iterable[Case],
    *,
    expected_fail: bool = False,
) -> VerifyReport:
    """Consume ``cases`` (in lexicographic parameter order) up to the first failure."""
    log_sweep_started(theorem_id, swept_range)
    started = time.perf_counter()
    counterexample = None
    for case in cases:
        if not case.holds:
            counterexample = Counterexample(
                params=dict(case.params), lhs=canonical(case.lhs), rhs=canonical(case.rhs)
            )
            break
    report = VerifyReport(
        theorem_id=theorem_id,
        swept_range=dict(swept_range),
        passed=counterexample is None,
        expected_fail=expected_fail,
        counterexample=counterexample,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )
    log_claim_result(report)
    return report


def aggregate(
    theorem_id: str, swept_range: Dict[str, int], subclaims: List[VerifyReport]
) -> VerifyReport:
    """Passes iff every sub-claim that is not a known discrepancy passed."""
    failing = [s for s in subclaims if not s.passed and not s.expected_fail]
    return VerifyReport(
        theorem_id=theorem_id,
        swept_range=dict(swept_range),
        passed=not failing,
        counterexample=failing[0].counterexample if failing else None,
        elapsed_ms=round(sum(s.elapsed_ms for s in subclaims), 3),
        subclaims=subclaims,
    )
