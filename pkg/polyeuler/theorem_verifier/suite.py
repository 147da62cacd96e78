"""Registry of every checker and the concurrent suite runner."""
from __future__ import annotations

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from ..shared.seq_logging import Emoticons
from ..shared.settings import get_settings
from ..shared.telemetry import track_event
from . import checkers
from .report import VerifyReport

LOGGER = logging.getLogger(__name__)


class SweepRanges(BaseModel):
    """Parameter bounds shared by every checker in one suite run."""

    nmax: int = Field(ge=0)
    kmax: int = Field(ge=0)
    pmax: int = Field(ge=3)
    Nmax: int = Field(ge=0)

    @classmethod
    def defaults(cls) -> "SweepRanges":
        settings = get_settings()
        return cls(
            nmax=settings.verify_nmax,
            kmax=settings.verify_kmax,
            pmax=settings.verify_pmax,
            Nmax=settings.verify_big_n_max,
        )


Checker = Callable[[SweepRanges], VerifyReport]

# Output order of ``verify all``.
THEOREMS: Dict[str, Checker] = {
    "recurrence-e2": lambda r: checkers.verify_recurrence_e2(r.nmax),
    "denominator": lambda r: checkers.verify_denominator(r.nmax),
    "sum1": lambda r: checkers.verify_sum1(r.nmax, r.kmax),
    "duality": lambda r: checkers.verify_duality(r.nmax, r.kmax),
    "pb-expansion": lambda r: checkers.verify_pb_expansion(r.nmax, r.kmax),
    "positivity": lambda r: checkers.verify_positivity(r.nmax, r.kmax),
    "congruences": lambda r: checkers.verify_congruences(r.nmax, r.kmax, r.pmax),
    "products": lambda r: checkers.verify_products(r.Nmax, r.nmax),
    "oracle": lambda r: checkers.verify_oracle_agreement(r.nmax, r.kmax, r.Nmax),
}


def resolve(theorem: str) -> List[str]:
    """``"all"`` expands to every id; unknown ids raise KeyError."""
    if theorem == "all":
        return list(THEOREMS)
    if theorem not in THEOREMS:
        raise KeyError(theorem)
    return [theorem]


def suite_passed(reports: Sequence[VerifyReport]) -> bool:
    return all(report.passed or report.expected_fail for report in reports)


async def run_suite(
    theorem_ids: Sequence[str],
    ranges: Optional[SweepRanges] = None,
    workers: Optional[int] = None,
) -> List[VerifyReport]:
    """Run the named checkers on a thread pool; reports come back in ``theorem_ids`` order."""
    ranges = ranges or SweepRanges.defaults()
    workers = workers or get_settings().verify_workers
    LOGGER.info(
        f"{Emoticons.STARTED} Verification suite started",
        extra={"Theorems": list(theorem_ids), "Workers": workers, **ranges.model_dump()},
    )

    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [
            loop.run_in_executor(executor, THEOREMS[theorem_id], ranges) for theorem_id in theorem_ids
        ]
        reports = list(await asyncio.gather(*futures))

    for report in reports:
        await track_event(
            "TheoremVerified",
            {"theorem_id": report.theorem_id, "passed": report.passed, "elapsed_ms": report.elapsed_ms},
        )

    if suite_passed(reports):
        LOGGER.info(f"{Emoticons.COMPLETED} Verification suite passed")
    else:
        failed = [r.theorem_id for r in reports if not (r.passed or r.expected_fail)]
        LOGGER.warning(f"{Emoticons.FAILED} Verification suite failed", extra={"Failed": failed})
    return reports
