"""Every sequence read straight off its generating function.

This is the reference the closed forms and recurrences are checked
against, so it deliberately shares no code with :mod:`polyeuler.sequences`
beyond the family names.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List

from ..sequences.families import Family, SeqFamily
from ..shared.errors import DivisionByNonUnit
from .series import (
    SeriesKind,
    TruncSeries,
    egf_extract,
    elementary_series,
    polylog_of,
    series_div,
)

LOGGER = logging.getLogger(__name__)


def _one_minus_exp(scale: int, order: int) -> TruncSeries:
    """1 - e^{scale t}."""
    return TruncSeries.monomial(0, 1, order) - elementary_series(SeriesKind.EXP, scale, order)


def _tail(kind: SeriesKind, big_n: int, order: int) -> TruncSeries:
    """sinh t (or cosh t) with every term below t^(2N+1) (t^(2N)) removed."""
    start = 2 * big_n + (1 if kind is SeriesKind.SINH else 0)
    full = elementary_series(kind, 1, order)
    return TruncSeries(tuple(Fraction(0) if i < start else c for i, c in enumerate(full.coeffs)))


def generating_quotient(family: SeqFamily, nmax: int) -> TruncSeries:
    """Numerator / denominator of the family's EGF, known through t^nmax."""
    fam = family.family

    if fam is Family.EULER:
        num = TruncSeries.monomial(0, 1, nmax)
        den = elementary_series(SeriesKind.COSH, 1, nmax)
    elif fam is Family.COMP_EULER:
        num = TruncSeries.monomial(1, 1, nmax + 1)
        den = elementary_series(SeriesKind.SINH, 1, nmax + 1)
    elif fam is Family.BERNOULLI_MINUS:
        num = TruncSeries.monomial(1, 1, nmax + 1)
        den = -_one_minus_exp(1, nmax + 1)
    elif fam is Family.BERNOULLI_PLUS:
        num = TruncSeries.monomial(1, 1, nmax + 1)
        den = _one_minus_exp(-1, nmax + 1)
    elif fam is Family.POLY_BERNOULLI:
        u = _one_minus_exp(-1, nmax + 1)
        num = polylog_of(family.k, u, nmax + 1)
        den = u
    elif fam is Family.POLY_EULER:
        num = polylog_of(family.k, _one_minus_exp(-4, nmax + 1), nmax + 1)
        # 4 t cosh t
        cosh = elementary_series(SeriesKind.COSH, 1, nmax)
        den = TruncSeries((Fraction(0),) + tuple(4 * c for c in cosh.coeffs))
    elif fam is Family.POLY_EULER2:
        num = polylog_of(family.k, _one_minus_exp(-4, nmax + 1), nmax + 1)
        den = elementary_series(SeriesKind.SINH, 1, nmax + 1).scale(4)
    elif fam is Family.HYPER_EULER:
        order = nmax + 2 * family.N
        num = TruncSeries.monomial(2 * family.N, Fraction(1, math.factorial(2 * family.N)), order)
        den = _tail(SeriesKind.COSH, family.N, order)
    elif fam is Family.HYPER_EULER2:
        order = nmax + 2 * family.N + 1
        num = TruncSeries.monomial(
            2 * family.N + 1, Fraction(1, math.factorial(2 * family.N + 1)), order
        )
        den = _tail(SeriesKind.SINH, family.N, order)
    else:  # pragma: no cover
        raise ValueError(f"unknown family {fam}")

    try:
        quotient = series_div(num, den)
    except DivisionByNonUnit:
        LOGGER.error("Generating function of %s is not a valid quotient", family.label())
        raise
    assert quotient.order == nmax, (family.label(), quotient.order, nmax)
    return quotient


def sequence_by_gf(family: SeqFamily, nmax: int) -> List[Fraction]:
    """EGF coefficients a_0..a_nmax of ``family`` by series division."""
    if nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {nmax}")
    quotient = generating_quotient(family, nmax)
    return [egf_extract(quotient, n) for n in range(nmax + 1)]
