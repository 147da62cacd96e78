"""Tests for Bernoulli numbers, Bernoulli polynomials and poly-Bernoulli numbers."""
from fractions import Fraction

import pytest
import sympy

from polyeuler.sequences import Convention, bernoulli, bernoulli_by_determinant, bernoulli_polynomial_at, poly_bernoulli
from polyeuler.shared.errors import ParameterOutOfRange

F = Fraction


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


class TestBernoulli:
    def test_b1_conventions(self):
        assert bernoulli(1, Convention.MINUS) == F(-1, 2)
        assert bernoulli(1, Convention.PLUS) == F(1, 2)
        assert bernoulli(1) == F(-1, 2)

    def test_b8(self):
        assert bernoulli(8) == F(-1, 30)

    def test_odd_indices_vanish(self):
        assert all(bernoulli(n) == 0 for n in range(3, 40, 2))

    def test_conventions_agree_off_index_one(self):
        assert all(bernoulli(n, "plus") == bernoulli(n, "minus") for n in range(40) if n != 1)

    def test_matches_sympy(self):
        # sympy's B_1 convention differs between releases, so skip index 1
        for n in [0] + list(range(2, 41)):
            assert bernoulli(n) == _fraction(sympy.bernoulli(n)), n

    def test_determinant(self):
        assert [bernoulli_by_determinant(n) for n in range(13)] == [bernoulli(n) for n in range(13)]


class TestBernoulliPolynomial:
    def test_at_zero_is_bernoulli_number(self):
        assert all(bernoulli_polynomial_at(n, 0) == bernoulli(n) for n in range(12))

    def test_b2_at_half(self):
        assert bernoulli_polynomial_at(2, F(1, 2)) == F(-1, 12)

    def test_scaled_b4_at_half(self):
        assert 2 ** 4 * bernoulli_polynomial_at(4, F(1, 2)) == F(7, 15)


class TestPolyBernoulli:
    def test_n_zero(self):
        assert all(poly_bernoulli(0, k) == 1 for k in range(-6, 7))

    def test_k_one_is_plus_bernoulli(self):
        assert [poly_bernoulli(n, 1) for n in range(12)] == [bernoulli(n, Convention.PLUS) for n in range(12)]

    def test_k_zero_is_one(self):
        assert all(poly_bernoulli(n, 0) == 1 for n in range(10))

    def test_duality_spot_value(self):
        assert poly_bernoulli(2, -3) == poly_bernoulli(3, -2) == 46

    def test_duality_grid(self):
        for n in range(9):
            for k in range(9):
                assert poly_bernoulli(n, -k) == poly_bernoulli(k, -n)

    def test_k_beyond_cap(self):
        with pytest.raises(ParameterOutOfRange):
            poly_bernoulli(2, -65)
