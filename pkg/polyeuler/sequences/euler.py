"""Euler numbers of both kinds, their hypergeometric and poly generalizations.

The even-in-t families store only even-index values; odd indices are exact
zeros and never reach a recurrence.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import List, Optional

from ..shared.cache import GrowingTable
from ..shared.errors import MethodRequiresNonpositiveK
from .bernoulli import _bernoulli_minus, _poly_bernoulli
from .combinatorics import _stirling2
from .families import CompEulerMethod, PolyEuler2Method
from .limits import check_k, check_n


def _next_euler(values: List[int]) -> int:
    # sum_{j=0}^{m} C(2m, 2j) E_2j = 0
    m = len(values)
    return -sum(math.comb(2 * m, 2 * j) * e for j, e in enumerate(values))


def _next_comp_euler(values: List[Fraction]) -> Fraction:
    # sum_{j=0}^{m} C(2m+1, 2j) E^_2j = 0
    m = len(values)
    acc = sum((math.comb(2 * m + 1, 2 * j) * e for j, e in enumerate(values)), Fraction(0))
    return -acc / (2 * m + 1)


_EULER_EVEN = GrowingTable([1], _next_euler)
_COMP_EULER_EVEN = GrowingTable([Fraction(1)], _next_comp_euler)


def _euler(n: int) -> int:
    return 0 if n % 2 else _EULER_EVEN[n // 2]


def euler_number(n: int) -> int:
    """E_n, the EGF coefficients of 1/cosh t."""
    check_n(n)
    return _euler(n)


def _comp_euler(n: int) -> Fraction:
    return Fraction(0) if n % 2 else _COMP_EULER_EVEN[n // 2]


def comp_euler(n: int, method: CompEulerMethod = CompEulerMethod.RECURRENCE) -> Fraction:
    """E^_n, the EGF coefficients of t/sinh t."""
    check_n(n)
    method = CompEulerMethod(method)
    if n % 2:
        return Fraction(0)
    if method is CompEulerMethod.RECURRENCE or n == 0:
        return _comp_euler(n)
    # E^_n = 2^n B_n(1/2) = (2 - 2^n) B_n
    return (2 - 2 ** n) * _bernoulli_minus(n)


@functools.lru_cache(maxsize=None)
def _hyper_table(big_n: int) -> GrowingTable:
    base = math.factorial(2 * big_n)

    def extend(values: List[Fraction]) -> Fraction:
        m = len(values)
        acc = sum(
            (
                Fraction(e, math.factorial(2 * big_n + 2 * m - 2 * i) * math.factorial(2 * i))
                for i, e in enumerate(values)
            ),
            Fraction(0),
        )
        return -math.factorial(2 * m) * base * acc

    return GrowingTable([Fraction(1)], extend)


@functools.lru_cache(maxsize=None)
def _hyper2_table(big_n: int) -> GrowingTable:
    base = math.factorial(2 * big_n + 1)

    def extend(values: List[Fraction]) -> Fraction:
        m = len(values)
        acc = sum(
            (
                Fraction(e, math.factorial(2 * big_n + 2 * m - 2 * i + 1) * math.factorial(2 * i))
                for i, e in enumerate(values)
            ),
            Fraction(0),
        )
        return -math.factorial(2 * m) * base * acc

    return GrowingTable([Fraction(1)], extend)


def _hyper_euler(big_n: int, n: int) -> Fraction:
    return Fraction(0) if n % 2 else _hyper_table(big_n)[n // 2]


def _hyper_euler2(big_n: int, n: int) -> Fraction:
    return Fraction(0) if n % 2 else _hyper2_table(big_n)[n // 2]


def hyper_euler(N: int, n: int) -> Fraction:
    """E_{N,n} from sum_i E_{N,2i} / ((2N+n-2i)! (2i)!) = 0 for even n >= 2."""
    check_n(N, "N")
    check_n(n)
    return _hyper_euler(N, n)


def hyper_euler2(N: int, n: int) -> Fraction:
    """E^_{N,n}; E^_{N,2m} = -(2m)!(2N+1)! sum_{i<m} E^_{N,2i} / ((2N+2m-2i+1)! (2i)!)."""
    check_n(N, "N")
    check_n(n)
    return _hyper_euler2(N, n)


def _pe2_via_pb(n: int, k: int) -> Fraction:
    total = Fraction(0)
    for m in range(n + 1):
        weight = math.comb(n, m) * 4 ** m * ((-1) ** (n - m) + (-3) ** (n - m))
        total += weight * _poly_bernoulli(m, k)
    return total / 2


def _pe2_stirling_neg(n: int, big_k: int) -> Fraction:
    total = sum(
        (-1) ** l * math.factorial(l) * _stirling2(big_k, l) * ((4 * l + 3) ** n + (4 * l + 1) ** n)
        for l in range(big_k + 1)
    )
    return Fraction((-1) ** big_k * total, 2)


def _pe2_stirling_neg2(n: int, big_k: int) -> Fraction:
    total = 0
    for l in range(big_k + 1):
        inner = sum(math.comb(n, 2 * m) * (4 * l + 2) ** (n - 2 * m) for m in range(n // 2 + 1))
        total += (-1) ** l * math.factorial(l) * _stirling2(big_k, l) * inner
    return Fraction((-1) ** big_k * total)


def poly_euler2(n: int, k: int, method: Optional[PolyEuler2Method] = None) -> Fraction:
    """E^_n^(k), the EGF coefficients of Li_k(1 - e^{-4t}) / (4 sinh t).

    ``method`` defaults to the Stirling form for k <= 0 and the
    poly-Bernoulli expansion otherwise.
    """
    check_n(n)
    check_k(k)
    if method is None:
        method = PolyEuler2Method.STIRLING_NEG if k <= 0 else PolyEuler2Method.VIA_PB
    method = PolyEuler2Method(method)

    if method is PolyEuler2Method.VIA_PB:
        return _pe2_via_pb(n, k)
    if k > 0:
        raise MethodRequiresNonpositiveK(method.value, k)
    if method is PolyEuler2Method.STIRLING_NEG:
        return _pe2_stirling_neg(n, -k)
    return _pe2_stirling_neg2(n, -k)


def poly_euler(n: int, k: int) -> Fraction:
    """E_n^(k), the EGF coefficients of Li_k(1 - e^{-4t}) / (4t cosh t).

    Uses (e^{-t} - e^{-3t}) / (2t) = sum_j c_j t^j / j! with
    c_j = ((-1)^(j+1) - (-3)^(j+1)) / (2(j+1)).
    """
    check_n(n)
    check_k(k)
    total = Fraction(0)
    for m in range(n + 1):
        j = n - m
        c = Fraction((-1) ** (j + 1) - (-3) ** (j + 1), 2 * (j + 1))
        total += math.comb(n, m) * 4 ** m * _poly_bernoulli(m, k) * c
    return total
