"""Lower Hessenberg determinants with a unit superdiagonal.

For the n x n matrix with M[i][j] = a_(i-j+1) on and below the diagonal and
ones above it, d_0 = 1 and d_m = sum_{i=1}^{m} (-1)^(i-1) a_i d_(m-i).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from ..shared.errors import SizeExceedsColumn
from .limits import check_n


def hessenberg_det(first_column: Sequence[Fraction], size: int) -> Fraction:
    """Determinant of the size x size Toeplitz-Hessenberg matrix on ``first_column``."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    if len(first_column) < size:
        raise SizeExceedsColumn(size, len(first_column))
    a = [Fraction(x) for x in first_column[:size]]

    d = [Fraction(1)]
    for m in range(1, size + 1):
        d.append(
            sum(((-1) ** (i - 1) * a[i - 1] * d[m - i] for i in range(1, m + 1)), Fraction(0))
        )
    return d[size]


def _signed_det(n: int, entry: Callable[[int], Fraction]) -> Fraction:
    """(-1)^n (2n)! det[entry(1..n)] for the even-index families."""
    column = [entry(i) for i in range(1, n + 1)]
    return (-1) ** n * math.factorial(2 * n) * hessenberg_det(column, n)


def euler_by_determinant(n: int) -> Fraction:
    """E_n with first column 1/2!, 1/4!, ..."""
    check_n(n)
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    return _signed_det(n // 2, lambda i: Fraction(1, math.factorial(2 * i)))


def comp_euler_by_determinant(n: int) -> Fraction:
    """E^_n with first column 1/3!, 1/5!, ..."""
    check_n(n)
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    return _signed_det(n // 2, lambda i: Fraction(1, math.factorial(2 * i + 1)))


def bernoulli_by_determinant(n: int) -> Fraction:
    """B_n (B_1 = -1/2) = (-1)^n n! det[1/2!, 1/3!, ...]."""
    check_n(n)
    if n == 0:
        return Fraction(1)
    column = [Fraction(1, math.factorial(i + 1)) for i in range(1, n + 1)]
    return (-1) ** n * math.factorial(n) * hessenberg_det(column, n)


def hyper_euler_by_determinant(N: int, n: int) -> Fraction:
    """E_{N,n} with first column (2N)!/(2N+2)!, (2N)!/(2N+4)!, ..."""
    check_n(N, "N")
    check_n(n)
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    base = math.factorial(2 * N)
    return _signed_det(n // 2, lambda i: Fraction(base, math.factorial(2 * N + 2 * i)))


def hyper_euler2_by_determinant(N: int, n: int) -> Fraction:
    """E^_{N,n} with first column (2N+1)!/(2N+3)!, (2N+1)!/(2N+5)!, ..."""
    check_n(N, "N")
    check_n(n)
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    base = math.factorial(2 * N + 1)
    return _signed_det(n // 2, lambda i: Fraction(base, math.factorial(2 * N + 2 * i + 1)))
