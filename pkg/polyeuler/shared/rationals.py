"""Canonical text form of exact rationals: ``p/q`` with ``/1`` dropped."""
from __future__ import annotations

import sys
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def allow_long_integers() -> None:
    """Lift CPython's int-to-str digit cap for the process.

    Values inside the public caps (e.g. B_200^(64)) run to thousands of digits.
    """
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def canonical(value: Rational) -> str:
    """Minus sign on the numerator, positive denominator, integers bare."""
    return str(Fraction(value))
