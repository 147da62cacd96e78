"""Tests for Euler numbers of both kinds and their generalizations."""
import math
from fractions import Fraction

import pytest
import sympy

from polyeuler.sequences import (
    CompEulerMethod,
    PolyEuler2Method,
    comp_euler,
    euler_number,
    hyper_euler,
    hyper_euler2,
    poly_euler,
    poly_euler2,
)
from polyeuler.shared.errors import MethodRequiresNonpositiveK, ParameterOutOfRange

F = Fraction

# rows n = 1..7, columns k = 1..5
TABLE_POSITIVE_K = [
    [0, -1, F(-3, 2), F(-7, 4), F(-15, 8)],
    [F(-1, 3), F(5, 9), F(59, 27), F(275, 81), F(1004, 243)],
    [0, 1, F(-11, 6), F(-211, 36), F(-985, 108)],
    [F(7, 15), F(-679, 225), F(-12737, 3375), F(245789, 50625), F(12383617, 759375)],
    [0, F(-7, 3), F(527, 30), F(47171, 2700), F(-85361, 9000)],
    [F(-31, 21), F(60001, 2205), F(483221, 231525), F(-1961354909, 24310125), F(-205924986214, 2552563125)],
    [0, F(31, 3), F(-45853, 210), F(-1250393, 132300), F(763114237, 2315250)],
]

# rows n = 1..7, columns -k = 0, -1, ..., -4
TABLE_NEGATIVE_K = [
    [2, 6, 14, 30, 62],
    [5, 37, 165, 613, 2085],
    [14, 234, 1826, 10770, 55154],
    [41, 1513, 19689, 175465, 1287657],
    [122, 9966, 210134, 2741670, 27930182],
    [365, 66637, 2236365, 41809933, 578341965],
    [1094, 450834, 23819306, 628464090, 11615023034],
]


class TestEulerNumber:
    @pytest.mark.parametrize("n, expected", [(0, 1), (3, 0), (6, -61)])
    def test_values(self, n, expected):
        assert euler_number(n) == expected

    def test_matches_sympy(self):
        assert [euler_number(n) for n in range(41)] == [int(sympy.euler(n)) for n in range(41)]


class TestCompEuler:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (0, 1),
            (1, 0),
            (2, F(-1, 3)),
            (24, F(1982765468311237, 1365)),
            (26, F(-286994504449393, 3)),
        ],
    )
    def test_values(self, n, expected):
        assert comp_euler(n) == expected

    def test_methods_agree(self):
        for n in range(31):
            assert comp_euler(n, CompEulerMethod.RECURRENCE) == comp_euler(n, "bernoulli_identity"), n

    def test_odd_vanishing(self):
        assert all(comp_euler(n) == 0 for n in range(1, 60, 2))

    def test_odd_double_factorial_clears_denominator(self):
        for n in range(51):
            scaled = comp_euler(2 * n) * math.prod(range(1, 2 * n + 2, 2))
            assert scaled.denominator == 1

    def test_n_beyond_cap(self):
        with pytest.raises(ParameterOutOfRange):
            comp_euler(514)


class TestPolyEuler2:
    def test_first_table(self):
        for n, row in enumerate(TABLE_POSITIVE_K, start=1):
            for k, expected in enumerate(row, start=1):
                assert poly_euler2(n, k) == expected, (n, k)

    def test_second_table(self):
        for n, row in enumerate(TABLE_NEGATIVE_K, start=1):
            for k, expected in enumerate(row):
                assert poly_euler2(n, -k) == expected, (n, -k)

    def test_index_one_closed_form(self):
        assert [poly_euler2(1, -k) for k in range(6)] == [2 ** (k + 2) - 2 for k in range(6)]

    def test_k_one_is_comp_euler(self):
        assert all(poly_euler2(n, 1) == comp_euler(n) for n in range(20))

    def test_methods_agree_for_nonpositive_k(self):
        for k in range(0, -7, -1):
            for n in range(17):
                expected = poly_euler2(n, k, PolyEuler2Method.VIA_PB)
                assert poly_euler2(n, k, PolyEuler2Method.STIRLING_NEG) == expected
                assert poly_euler2(n, k, PolyEuler2Method.STIRLING_NEG2) == expected

    def test_stirling_methods_need_nonpositive_k(self):
        with pytest.raises(MethodRequiresNonpositiveK):
            poly_euler2(3, 2, PolyEuler2Method.STIRLING_NEG)

    def test_negative_index_values_are_integers(self):
        assert all(poly_euler2(n, -k).denominator == 1 for n in range(12) for k in range(8))


class TestPolyEuler:
    def test_k_one_is_euler(self):
        assert all(poly_euler(n, 1) == euler_number(n) for n in range(25))

    def test_n_zero(self):
        assert all(poly_euler(0, k) == 1 for k in range(-4, 5))


class TestHyperEuler:
    @pytest.mark.parametrize("N, n, expected", [(0, 4, 5), (1, 2, F(-1, 6)), (3, 0, 1), (2, 5, 0)])
    def test_first_kind(self, N, n, expected):
        assert hyper_euler(N, n) == expected

    @pytest.mark.parametrize("N, n, expected", [(0, 2, F(-1, 3)), (1, 2, F(-1, 10)), (4, 0, 1), (2, 3, 0)])
    def test_second_kind(self, N, n, expected):
        assert hyper_euler2(N, n) == expected

    def test_reduce_at_n_zero(self):
        for n in range(21):
            assert hyper_euler(0, n) == euler_number(n)
            assert hyper_euler2(0, n) == comp_euler(n)
