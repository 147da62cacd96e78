"""Closed forms, recurrences and determinants for every number family."""
from .bernoulli import bernoulli, bernoulli_polynomial_at, poly_bernoulli
from .combinatorics import denominator_product, odd_double_factorial, stirling2, stirling2_explicit
from .determinants import (
    bernoulli_by_determinant,
    comp_euler_by_determinant,
    euler_by_determinant,
    hessenberg_det,
    hyper_euler2_by_determinant,
    hyper_euler_by_determinant,
)
from .euler import comp_euler, euler_number, hyper_euler, hyper_euler2, poly_euler, poly_euler2
from .families import CompEulerMethod, Convention, Family, PolyEuler2Method, SeqFamily
from .registry import family_value
from .tabulate import PUBLIC_FAMILIES, build_table, resolve_family, single_value

__all__ = [
    "CompEulerMethod",
    "Convention",
    "Family",
    "PUBLIC_FAMILIES",
    "PolyEuler2Method",
    "SeqFamily",
    "bernoulli",
    "bernoulli_by_determinant",
    "bernoulli_polynomial_at",
    "build_table",
    "comp_euler",
    "comp_euler_by_determinant",
    "denominator_product",
    "euler_by_determinant",
    "euler_number",
    "family_value",
    "hessenberg_det",
    "hyper_euler",
    "hyper_euler2",
    "hyper_euler2_by_determinant",
    "hyper_euler_by_determinant",
    "odd_double_factorial",
    "poly_bernoulli",
    "poly_euler",
    "poly_euler2",
    "resolve_family",
    "single_value",
    "stirling2",
    "stirling2_explicit",
]
