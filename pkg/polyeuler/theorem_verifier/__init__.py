"""Executable checks of every identity, congruence and table."""
from .checkers import (
    verify_congruences,
    verify_denominator,
    verify_duality,
    verify_oracle_agreement,
    verify_pb_expansion,
    verify_positivity,
    verify_products,
    verify_recurrence_e2,
    verify_sum1,
)
from .report import Counterexample, VerifyReport
from .suite import THEOREMS, SweepRanges, run_suite, suite_passed

__all__ = [
    "THEOREMS",
    "Counterexample",
    "SweepRanges",
    "VerifyReport",
    "run_suite",
    "suite_passed",
    "verify_congruences",
    "verify_denominator",
    "verify_duality",
    "verify_oracle_agreement",
    "verify_pb_expansion",
    "verify_positivity",
    "verify_products",
    "verify_recurrence_e2",
    "verify_sum1",
]
