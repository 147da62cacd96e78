"""Truncated formal power series over the rationals.

A :class:`TruncSeries` of order ``r`` knows the coefficients of t^0..t^r and
nothing beyond. Binary operations shrink to the smaller order instead of
padding with zeros, so a coefficient is never silently invented.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

from ..shared.errors import DivisionByNonUnit, IndexBeyondOrder, NonzeroConstantTerm

Scalar = Union[int, Fraction]


class SeriesKind(str, Enum):
    EXP = "exp"
    SINH = "sinh"
    COSH = "cosh"


@dataclass(frozen=True)
class TruncSeries:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @classmethod
    def of(cls, values: Iterable[Scalar]) -> "TruncSeries":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar, order: int) -> "TruncSeries":
        """``coefficient * t^degree`` known through ``order``."""
        coeffs = [Fraction(0)] * (order + 1)
        if degree <= order:
            coeffs[degree] = Fraction(coefficient)
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None if zero through the order."""
        for index, c in enumerate(self.coeffs):
            if c:
                return index
        return None

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise IndexBeyondOrder(order, self.order)
        return TruncSeries(self.coeffs[: order + 1])

    def scale(self, factor: Scalar) -> "TruncSeries":
        factor = Fraction(factor)
        return TruncSeries(tuple(c * factor for c in self.coeffs))

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(order + 1)))

    def __neg__(self) -> "TruncSeries":
        return self.scale(-1)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        return series_mul(self, other)

    def __truediv__(self, other: "TruncSeries") -> "TruncSeries":
        return series_div(self, other)


def elementary_series(kind: SeriesKind, scale: Scalar, order: int) -> TruncSeries:
    """exp/sinh/cosh of ``scale * t`` through t^order."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    kind = SeriesKind(kind)
    scale = Fraction(scale)

    coeffs = []
    term = Fraction(1)  # scale^n / n!
    for n in range(order + 1):
        if n:
            term = term * scale / n
        if kind is SeriesKind.EXP:
            coeffs.append(term)
        elif kind is SeriesKind.SINH:
            coeffs.append(term if n % 2 else Fraction(0))
        else:
            coeffs.append(Fraction(0) if n % 2 else term)
    return TruncSeries(tuple(coeffs))


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product through min(a.order, b.order)."""
    order = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    return TruncSeries(
        tuple(sum((x[i] * y[n - i] for i in range(n + 1)), Fraction(0)) for n in range(order + 1))
    )


def series_div(num: TruncSeries, den: TruncSeries) -> TruncSeries:
    """Quotient after cancelling the common power t^valuation(den).

    The result is known through min(num.order, den.order) - valuation(den).
    """
    shift = den.valuation()
    if shift is None:
        raise DivisionByNonUnit(f"denominator vanishes through order {den.order}")
    num_valuation = num.valuation()
    if num_valuation is not None and num_valuation < shift:
        raise DivisionByNonUnit(
            f"numerator valuation {num_valuation} is below denominator valuation {shift}"
        )

    order = min(num.order, den.order) - shift
    if order < 0:
        raise DivisionByNonUnit(f"no coefficients survive the shift by t^{shift}")
    a = num.coeffs[shift:]
    b = den.coeffs[shift:]
    lead = b[0]

    quotient = []
    for n in range(order + 1):
        acc = a[n]
        for i in range(1, n + 1):
            acc -= b[i] * quotient[n - i]
        quotient.append(acc / lead)
    return TruncSeries(tuple(quotient))


def polylog_of(k: int, u: TruncSeries, order: int) -> TruncSeries:
    """Li_k(u) = sum_{m>=1} u^m / m^k through t^order, for u with u(0) = 0.

    For k <= 0 the weight 1/m^k is the integer m^|k|.
    """
    if u.coeffs[0] != 0:
        raise NonzeroConstantTerm(u.coeffs[0])
    order = min(order, u.order)
    u = u.truncate(order)

    total = TruncSeries.monomial(0, 0, order)
    power = TruncSeries.monomial(0, 1, order)
    # valuation(u^m) >= m, so terms with m > order vanish
    for m in range(1, order + 1):
        power = series_mul(power, u)
        weight = Fraction(1, m ** k) if k > 0 else Fraction(m ** -k)
        total = total + power.scale(weight)
    return total


def egf_extract(s: TruncSeries, n: int) -> Fraction:
    """a_n where s = sum a_n t^n / n!."""
    if n < 0 or n > s.order:
        raise IndexBeyondOrder(n, s.order)
    return s.coeffs[n] * math.factorial(n)
