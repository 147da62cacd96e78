"""Stirling numbers of the second kind and the odd-prime denominator product."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Tuple

from sympy import sieve

from ..shared.cache import GrowingTable
from .limits import check_n


def _next_stirling_row(rows: List[Tuple[int, ...]]) -> Tuple[int, ...]:
    n = len(rows)
    prev = rows[-1]
    row = [0] * (n + 1)
    for j in range(1, n + 1):
        row[j] = prev[j - 1] + (j * prev[j] if j < n else 0)
    return tuple(row)


# row n holds S(n, 0..n)
_STIRLING2 = GrowingTable([(1,)], _next_stirling_row)


def _stirling2(n: int, j: int) -> int:
    if j < 0 or j > n:
        return 0
    return _STIRLING2[n][j]


def stirling2(n: int, j: int) -> int:
    """S(n, j): partitions of an n-set into j nonempty blocks."""
    check_n(n)
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    return _stirling2(n, j)


def stirling2_explicit(n: int, j: int) -> int:
    """(1/j!) sum_i (-1)^(j-i) C(j,i) i^n, with 0^0 = 1."""
    total = sum((-1) ** (j - i) * math.comb(j, i) * i ** n for i in range(j + 1))
    value = Fraction(total, math.factorial(j))
    assert value.denominator == 1
    return int(value)


def denominator_product(n: int) -> int:
    """Product of the odd primes p with (p - 1) | 2n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    check_n(n)
    product = 1
    # p - 1 <= 2n bounds the search
    for p in sieve.primerange(3, 2 * n + 2):
        if (2 * n) % (p - 1) == 0:
            product *= p
    return product


def odd_double_factorial(n: int) -> int:
    """(2n+1)(2n-1)...3 = (2n+1)! / (2^n n!)."""
    return math.factorial(2 * n + 1) // (2 ** n * math.factorial(n))
