"""Family name -> value of the family at index n."""
from __future__ import annotations

from fractions import Fraction

from .bernoulli import bernoulli, poly_bernoulli
from .euler import comp_euler, euler_number, hyper_euler, hyper_euler2, poly_euler, poly_euler2
from .families import Convention, Family, SeqFamily


def family_value(family: SeqFamily, n: int) -> Fraction:
    """Closed-form / recurrence value a_n of ``family``."""
    fam = family.family
    if fam is Family.EULER:
        return Fraction(euler_number(n))
    if fam is Family.COMP_EULER:
        return comp_euler(n)
    if fam is Family.BERNOULLI_MINUS:
        return bernoulli(n, Convention.MINUS)
    if fam is Family.BERNOULLI_PLUS:
        return bernoulli(n, Convention.PLUS)
    if fam is Family.POLY_BERNOULLI:
        return poly_bernoulli(n, family.k)
    if fam is Family.POLY_EULER:
        return poly_euler(n, family.k)
    if fam is Family.POLY_EULER2:
        return poly_euler2(n, family.k)
    if fam is Family.HYPER_EULER:
        return hyper_euler(family.N, n)
    if fam is Family.HYPER_EULER2:
        return hyper_euler2(family.N, n)
    raise ValueError(f"unknown family {fam}")  # pragma: no cover
