"""Bernoulli numbers, Bernoulli polynomials and poly-Bernoulli numbers."""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import List

from ..shared.cache import GrowingTable
from .combinatorics import _stirling2
from .families import Convention
from .limits import check_k, check_n


def _next_bernoulli(values: List[Fraction]) -> Fraction:
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    n = len(values)
    acc = sum((math.comb(n + 1, j) * b for j, b in enumerate(values)), Fraction(0))
    return -acc / (n + 1)


_BERNOULLI_MINUS = GrowingTable([Fraction(1)], _next_bernoulli)


def _bernoulli_minus(n: int) -> Fraction:
    if n > 1 and n % 2:
        return Fraction(0)
    return _BERNOULLI_MINUS[n]


def bernoulli(n: int, conv: Convention = Convention.MINUS) -> Fraction:
    """B_n with B_1 = -1/2 (minus) or +1/2 (plus); all other indices agree."""
    check_n(n)
    if n == 1 and Convention(conv) is Convention.PLUS:
        return Fraction(1, 2)
    return _bernoulli_minus(n)


def bernoulli_polynomial_at(n: int, x: Fraction) -> Fraction:
    """B_n(x) = sum_j C(n,j) B_j x^(n-j), minus convention."""
    check_n(n)
    x = Fraction(x)
    return sum(
        (math.comb(n, j) * _bernoulli_minus(j) * x ** (n - j) for j in range(n + 1)),
        Fraction(0),
    )


@functools.lru_cache(maxsize=None)
def _poly_bernoulli(n: int, k: int) -> Fraction:
    total = Fraction(0)
    for j in range(n + 1):
        term = (-1) ** (n - j) * math.factorial(j) * _stirling2(n, j)
        if k > 0:
            total += Fraction(term, (j + 1) ** k)
        else:
            total += term * (j + 1) ** -k
    return total


def poly_bernoulli(n: int, k: int) -> Fraction:
    """B_n^(k) = sum_j (-1)^(n-j) j! S(n,j) / (j+1)^k."""
    check_n(n)
    check_k(k)
    return _poly_bernoulli(n, k)
