"""Closed forms of E^_n^(-k) for small fixed n (polynomials in 2^k, 3^k, ...)
and small fixed k (sums of odd powers in n)."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict

# n -> k -> E^_n^(-k)
FIXED_N: Dict[int, Callable[[int], int]] = {
    0: lambda k: 1,
    1: lambda k: 2 ** (k + 2) - 2,
    2: lambda k: 32 * 3 ** k - 2 ** (k + 5) + 5,
    3: lambda k: 384 * 4 ** k - 576 * 3 ** k + 220 * 2 ** k - 14,
    4: lambda k: 6144 * 5 ** k - 12288 * 4 ** k + 7616 * 3 ** k - 1472 * 2 ** k + 41,
    5: lambda k: (
        122880 * 6 ** k
        - 307200 * 5 ** k
        + 264960 * 4 ** k
        - 90240 * 3 ** k
        + 9844 * 2 ** k
        - 122
    ),
}


def _pair(a: int, n: int) -> int:
    return (4 * a + 3) ** n + (4 * a + 1) ** n


# k -> n -> E^_n^(-k); _pair(a, n) = (4a+3)^n + (4a+1)^n
FIXED_K: Dict[int, Callable[[int], Fraction]] = {
    0: lambda n: Fraction(_pair(0, n), 2),
    1: lambda n: Fraction(_pair(1, n), 2),
    2: lambda n: Fraction(2 * _pair(2, n) - _pair(1, n), 2),
    3: lambda n: Fraction(6 * _pair(3, n) - 6 * _pair(2, n) + _pair(1, n), 2),
    4: lambda n: Fraction(24 * _pair(4, n) - 36 * _pair(3, n) + 14 * _pair(2, n) - _pair(1, n), 2),
    5: lambda n: Fraction(
        120 * _pair(5, n) - 240 * _pair(4, n) + 150 * _pair(3, n) - 30 * _pair(2, n) + _pair(1, n),
        2,
    ),
}


def special_value(n: int, k: int) -> Fraction:
    """E^_n^(-k) from whichever closed form covers (n, k)."""
    if n in FIXED_N:
        return Fraction(FIXED_N[n](k))
    if k in FIXED_K:
        return FIXED_K[k](n)
    raise KeyError(f"no closed form for n={n}, k={k}")
