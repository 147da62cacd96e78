"""Tests for Stirling numbers and the odd-prime denominator product."""
import math
from itertools import product

import pytest
from sympy.functions.combinatorial.numbers import stirling

from polyeuler.sequences import denominator_product, odd_double_factorial, stirling2, stirling2_explicit
from polyeuler.shared.errors import ParameterOutOfRange


class TestStirling2:
    @pytest.mark.parametrize("n, j, expected", [(0, 0, 1), (4, 2, 7), (5, 5, 1), (5, 0, 0), (3, 4, 0)])
    def test_values(self, n, j, expected):
        assert stirling2(n, j) == expected

    def test_recurrence_matches_explicit_sum(self):
        for n, j in product(range(31), repeat=2):
            assert stirling2(n, j) == stirling2_explicit(n, j), (n, j)

    def test_matches_sympy(self):
        for n, j in product(range(16), repeat=2):
            assert stirling2(n, j) == int(stirling(n, j, kind=2))

    def test_negative_j(self):
        with pytest.raises(ValueError):
            stirling2(3, -1)

    def test_n_beyond_cap(self):
        with pytest.raises(ParameterOutOfRange):
            stirling2(513, 1)


class TestDenominatorProduct:
    @pytest.mark.parametrize("n, expected", [(1, 3), (2, 15), (12, 1365), (13, 3)])
    def test_values(self, n, expected):
        assert denominator_product(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            denominator_product(0)


def test_odd_double_factorial():
    assert [odd_double_factorial(n) for n in range(5)] == [1, 3, 15, 105, 945]
    assert odd_double_factorial(20) == math.prod(range(1, 42, 2))
