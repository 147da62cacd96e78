"""One checker per identity, congruence and cross-method agreement.

Every checker enumerates its parameter tuples in lexicographic order, so the
first counterexample recorded is the smallest one. Composite checkers run
all of their sub-claims even after one fails.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterator, List

from sympy import sieve

from ..sequences import (
    CompEulerMethod,
    Convention,
    Family,
    PolyEuler2Method,
    SeqFamily,
    bernoulli,
    bernoulli_by_determinant,
    bernoulli_polynomial_at,
    comp_euler,
    comp_euler_by_determinant,
    denominator_product,
    euler_by_determinant,
    euler_number,
    hyper_euler,
    hyper_euler2,
    hyper_euler2_by_determinant,
    hyper_euler_by_determinant,
    odd_double_factorial,
    poly_bernoulli,
    poly_euler,
    poly_euler2,
    stirling2,
    stirling2_explicit,
)
from ..sequences.special_values import FIXED_K, FIXED_N, special_value
from ..series_engine import sequence_by_gf
from .report import Case, VerifyReport, aggregate, at_least_case, congruent_case, equal_case, run_claim


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


# =============================================================================
# Euler numbers of the second kind
# =============================================================================

def verify_recurrence_e2(
    nmax: int, values: Callable[[int], Fraction] = comp_euler
) -> VerifyReport:
    """sum_{j=0}^{n} C(2n+1, 2j) E^_2j = 0 for 1 <= n <= nmax.

    ``values`` supplies E^_m and exists so a perturbed sequence can be fed in.
    """
    _require(nmax >= 1, f"nmax must be >= 1, got {nmax}")
    swept = {"nmax": nmax}

    def second_kind() -> Iterator[Case]:
        for n in range(1, nmax + 1):
            lhs = sum(
                (math.comb(2 * n + 1, 2 * j) * values(2 * j) for j in range(n + 1)), Fraction(0)
            )
            yield equal_case({"n": n}, lhs, 0)

    def first_kind() -> Iterator[Case]:
        for n in range(1, nmax + 1):
            lhs = sum(math.comb(2 * n, 2 * j) * euler_number(2 * j) for j in range(n + 1))
            yield equal_case({"n": n}, lhs, 0)

    return aggregate(
        "recurrence-e2",
        swept,
        [
            run_claim("recurrence-e2/second-kind", swept, second_kind()),
            run_claim("recurrence-e2/euler", swept, first_kind()),
        ],
    )


def verify_denominator(nmax: int) -> VerifyReport:
    """Reduced denominator of E^_2n is the product of odd p with (p-1) | 2n."""
    _require(nmax >= 1, f"nmax must be >= 1, got {nmax}")
    swept = {"nmax": nmax}

    def denominators() -> Iterator[Case]:
        for n in range(1, nmax + 1):
            yield equal_case({"n": n}, comp_euler(2 * n).denominator, denominator_product(n))

    def integrality() -> Iterator[Case]:
        for n in range(0, nmax + 1):
            scaled = odd_double_factorial(n) * comp_euler(2 * n)
            yield Case({"n": n}, scaled, math.floor(scaled), scaled.denominator == 1)

    return aggregate(
        "denominator",
        swept,
        [
            run_claim("denominator/product", swept, denominators()),
            run_claim("denominator/integrality", swept, integrality()),
        ],
    )


def verify_sum1(nmax: int, kmax: int) -> VerifyReport:
    """Power sums of even numbers from the complementary Euler numbers."""
    _require(nmax >= 1, f"nmax must be >= 1, got {nmax}")
    _require(kmax >= 0, f"kmax must be >= 0, got {kmax}")
    swept = {"nmax": nmax, "kmax": kmax}

    def second_kind() -> Iterator[Case]:
        for n in range(1, nmax + 1):
            for k in range(kmax + 1):
                lhs = sum(
                    (
                        math.comb(2 * n + 1, 2 * j) * (2 * k + 1) ** (2 * n - 2 * j + 1) * comp_euler(2 * j)
                        for j in range(n + 1)
                    ),
                    Fraction(0),
                )
                rhs = 2 * (2 * n + 1) * sum((2 * l) ** (2 * n) for l in range(1, k + 1))
                yield equal_case({"n": n, "k": k}, lhs, rhs)

    def first_kind() -> Iterator[Case]:
        # alternating analogue for the classical Euler numbers
        for n in range(1, nmax + 1):
            for k in range(kmax + 1):
                lhs = sum(
                    math.comb(2 * n, 2 * j) * (2 * k + 1) ** (2 * n - 2 * j) * euler_number(2 * j)
                    for j in range(n + 1)
                )
                rhs = 2 * sum((-1) ** (k - l) * (2 * l) ** (2 * n) for l in range(1, k + 1))
                yield equal_case({"n": n, "k": k}, lhs, rhs)

    return aggregate(
        "sum1",
        swept,
        [
            run_claim("sum1/second-kind", swept, second_kind()),
            run_claim("sum1/euler", swept, first_kind()),
        ],
    )


# =============================================================================
# Poly-Euler numbers of the second kind and poly-Bernoulli numbers
# =============================================================================

def _duality_side(n: int, k: int) -> Fraction:
    total = sum(
        (math.comb(n, m) * (2 - euler_number(n - m)) * poly_euler2(m, -k) for m in range(n + 1)),
        Fraction(0),
    )
    return total / 4 ** n


def verify_duality(nmax: int, kmax: int) -> VerifyReport:
    """Symmetric weighted sums of E^_m^(-k), tied back to poly-Bernoulli numbers."""
    _require(nmax >= 0 and kmax >= 0, f"nmax and kmax must be >= 0, got {nmax}, {kmax}")
    swept = {"nmax": nmax, "kmax": kmax}

    def symmetry() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in range(kmax + 1):
                yield equal_case({"n": n, "k": k}, _duality_side(n, k), _duality_side(k, n))

    def poly_bernoulli_tie() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in range(kmax + 1):
                params = {"n": n, "k": k}
                left = _duality_side(n, k)
                yield equal_case(params, left, poly_bernoulli(n, -k))
                yield equal_case(params, _duality_side(k, n), poly_bernoulli(k, -n))

    def kaneko() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in range(kmax + 1):
                yield equal_case({"n": n, "k": k}, poly_bernoulli(n, -k), poly_bernoulli(k, -n))

    return aggregate(
        "duality",
        swept,
        [
            run_claim("duality/symmetry", swept, symmetry()),
            run_claim("duality/poly-bernoulli", swept, poly_bernoulli_tie()),
            run_claim("duality/kaneko", swept, kaneko()),
        ],
    )


def verify_pb_expansion(nmax: int, kmax: int) -> VerifyReport:
    """4^n B_n^(k) = sum_m C(n,m)(2 - E_(n-m)) E^_m^(k), both signs of k."""
    _require(nmax >= 0 and kmax >= 0, f"nmax and kmax must be >= 0, got {nmax}, {kmax}")
    swept = {"nmax": nmax, "kmax": kmax}
    ks = range(-kmax, kmax + 1)

    def expansion() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in ks:
                rhs = sum(
                    (math.comb(n, m) * (2 - euler_number(n - m)) * poly_euler2(m, k) for m in range(n + 1)),
                    Fraction(0),
                )
                yield equal_case({"n": n, "k": k}, 4 ** n * poly_bernoulli(n, k), rhs)

    def round_trip() -> Iterator[Case]:
        # E^ rebuilt from B_n^(k) against the generating function itself
        oracle = {k: sequence_by_gf(SeqFamily(family=Family.POLY_EULER2, k=k), nmax) for k in ks}
        for n in range(nmax + 1):
            for k in ks:
                yield equal_case(
                    {"n": n, "k": k}, poly_euler2(n, k, PolyEuler2Method.VIA_PB), oracle[k][n]
                )

    return aggregate(
        "pb-expansion",
        swept,
        [
            run_claim("pb-expansion/expansion", swept, expansion()),
            run_claim("pb-expansion/round-trip", swept, round_trip()),
        ],
    )


def positivity_summands(n: int, k: int) -> List[Fraction]:
    """Terms of the Stirling triple sum for E^_n^(-k), in (j, m, mu) order."""
    terms = []
    for j in range(min(n, k) + 1):
        for m in range(n + 1):
            for mu in range(k + 1):
                term = (
                    math.factorial(j) ** 2
                    * math.comb(n, m)
                    * math.comb(k, mu)
                    * stirling2(n - m, j)
                    * stirling2(mu, j)
                    * 4 ** (n - m)
                    * Fraction(3 ** m + 1, 2)
                )
                terms.append(term)
    return terms


def verify_positivity(nmax: int, kmax: int) -> VerifyReport:
    _require(nmax >= 0 and kmax >= 0, f"nmax and kmax must be >= 0, got {nmax}, {kmax}")
    swept = {"nmax": nmax, "kmax": kmax}

    def formula() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in range(kmax + 1):
                total = sum(positivity_summands(n, k), Fraction(0))
                yield equal_case({"n": n, "k": k}, total, poly_euler2(n, -k))

    def nonnegative() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in range(kmax + 1):
                yield at_least_case({"n": n, "k": k}, min(positivity_summands(n, k)), 0)

    return aggregate(
        "positivity",
        swept,
        [
            run_claim("positivity/formula", swept, formula()),
            run_claim("positivity/nonnegative", swept, nonnegative()),
        ],
    )


def _integer_value(n: int, k: int) -> int:
    """E^_n^(-k) as an int; negative upper index values are integers."""
    value = poly_euler2(n, -k)
    assert value.denominator == 1, (n, k, value)
    return value.numerator


def verify_congruences(nmax: int, kmax: int, pmax: int) -> VerifyReport:
    """Congruences of E^_n^(-k) modulo odd primes and modulo 2.

    The sub-claim ``congruences/e2-even`` (E^_2^(-k) even) contradicts the
    parity rule for even n and is reported as an expected failure.

    ``congruences/periodicity`` sweeps m, n >= 1 only. Periodicity in n fails
    at index 0: for p = 3, k = 0, E^_0 = 1 but E^_2 = 5, since the Fermat step
    (4l+1)^(p-1) = 1 (mod p) breaks when p divides 4l+1 or 4l+3.
    """
    _require(pmax >= 3, f"pmax must be >= 3, got {pmax}")
    _require(nmax >= 1 and kmax >= 0, f"nmax must be >= 1 and kmax >= 0, got {nmax}, {kmax}")
    swept = {"nmax": nmax, "kmax": kmax, "pmax": pmax}
    primes = list(sieve.primerange(3, pmax + 1))
    value = _integer_value

    def periodicity() -> Iterator[Case]:
        # zero exponents excluded: Fermat needs m, n >= 1
        for p in primes:
            for k in range(kmax + 1):
                for m in range(1, nmax + 1):
                    for n in range(m + p - 1, nmax + 1, p - 1):
                        yield congruent_case({"p": p, "k": k, "m": m, "n": n}, value(n, k), value(m, k), p)

    def odd_vanishing() -> Iterator[Case]:
        for p in primes:
            for k in range(1, kmax + 1, 2):
                if k % (p - 1) != (p - 2) % (p - 1):
                    continue
                for n in range(1, nmax + 1, 2):
                    yield congruent_case({"p": p, "k": k, "n": n}, value(n, k), 0, p)

    def prime_index() -> Iterator[Case]:
        for p in primes:
            if p <= 3:
                continue
            for k in range(kmax + 1):
                yield congruent_case({"p": p, "k": k}, value(p, k), 2 ** (k + 2) - 2, p)

    def index_three() -> Iterator[Case]:
        for k in range(kmax + 1):
            yield congruent_case({"k": k}, value(3, k), (-1) ** k + 1, 3)

    def parity() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in range(kmax + 1):
                yield congruent_case({"n": n, "k": k}, value(n, k), 1 - n % 2, 2)

    def e2_even() -> Iterator[Case]:
        for k in range(kmax + 1):
            yield congruent_case({"k": k}, value(2, k), 0, 2)

    return aggregate(
        "congruences",
        swept,
        [
            run_claim("congruences/periodicity", swept, periodicity()),
            run_claim("congruences/odd-vanishing", swept, odd_vanishing()),
            run_claim("congruences/prime-index", swept, prime_index()),
            run_claim("congruences/index-three", swept, index_three()),
            run_claim("congruences/parity", swept, parity()),
            run_claim("congruences/e2-even", swept, e2_even(), expected_fail=True),
        ],
    )


# =============================================================================
# Hypergeometric Euler numbers
# =============================================================================

def verify_products(Nmax: int, nmax: int) -> VerifyReport:
    """Sums of products of hypergeometric Euler numbers of both kinds."""
    _require(Nmax >= 0 and nmax >= 0, f"Nmax and nmax must be >= 0, got {Nmax}, {nmax}")
    swept = {"Nmax": Nmax, "nmax": nmax}

    def first_kind() -> Iterator[Case]:
        for N in range(1, Nmax + 1):
            for n in range(nmax + 1):
                lhs = sum(
                    (math.comb(n, i) * hyper_euler(N, i) * hyper_euler(N, n - i) for i in range(n + 1)),
                    Fraction(0),
                )
                rhs = sum(
                    (
                        math.comb(n, k) * Fraction(2 * N - k, 2 * N) * hyper_euler(N, k) * hyper_euler2(N - 1, n - k)
                        for k in range(n + 1)
                    ),
                    Fraction(0),
                )
                yield equal_case({"N": N, "n": n}, lhs, rhs)

    def second_kind() -> Iterator[Case]:
        for N in range(Nmax + 1):
            for n in range(nmax + 1):
                lhs = sum(
                    (math.comb(n, i) * hyper_euler2(N, i) * hyper_euler2(N, n - i) for i in range(n + 1)),
                    Fraction(0),
                )
                rhs = sum(
                    (
                        math.comb(n, k) * Fraction(2 * N - k + 1, 2 * N + 1) * hyper_euler2(N, k) * hyper_euler(N, n - k)
                        for k in range(n + 1)
                    ),
                    Fraction(0),
                )
                yield equal_case({"N": N, "n": n}, lhs, rhs)

    return aggregate(
        "products",
        swept,
        [
            run_claim("products/first-kind", swept, first_kind()),
            run_claim("products/second-kind", swept, second_kind()),
        ],
    )


# =============================================================================
# Closed forms against generating functions
# =============================================================================

def _agreement(
    theorem_id: str,
    swept: dict,
    families: List[SeqFamily],
    nmax: int,
    routes: List[Callable[[SeqFamily, int], Fraction]],
) -> VerifyReport:
    def cases() -> Iterator[Case]:
        for family in families:
            oracle = sequence_by_gf(family, nmax)
            prefix = {"k": family.k} if family.k is not None else {}
            if family.N is not None:
                prefix = {"N": family.N}
            for route_index, route in enumerate(routes):
                for n in range(nmax + 1):
                    params = {**prefix, "route": route_index, "n": n}
                    yield equal_case(params, route(family, n), oracle[n])

    return run_claim(theorem_id, swept, cases())


def verify_oracle_agreement(nmax: int, krange: int, Nmax: int) -> VerifyReport:
    """Every closed form, recurrence and determinant against the series oracle.

    The last sub-claim pits the Stirling recurrence against its explicit sum.

    ``route`` in a counterexample indexes the method list of that sub-claim.
    """
    _require(nmax >= 0 and krange >= 0 and Nmax >= 0, "nmax, krange and Nmax must be >= 0")
    swept = {"nmax": nmax, "krange": krange, "Nmax": Nmax}
    ks = range(-krange, krange + 1)

    def with_k(family: Family) -> List[SeqFamily]:
        return [SeqFamily(family=family, k=k) for k in ks]

    def with_big_n(family: Family) -> List[SeqFamily]:
        return [SeqFamily(family=family, N=N) for N in range(Nmax + 1)]

    def poly_euler2_methods() -> Iterator[Case]:
        for family in with_k(Family.POLY_EULER2):
            oracle = sequence_by_gf(family, nmax)
            methods = [PolyEuler2Method.VIA_PB]
            if family.k <= 0:
                methods += [PolyEuler2Method.STIRLING_NEG, PolyEuler2Method.STIRLING_NEG2]
            for route_index, method in enumerate(methods):
                for n in range(nmax + 1):
                    yield equal_case(
                        {"k": family.k, "route": route_index, "n": n},
                        poly_euler2(n, family.k, method),
                        oracle[n],
                    )

    def special_values() -> Iterator[Case]:
        for n in range(nmax + 1):
            for k in range(krange + 1):
                if n in FIXED_N or k in FIXED_K:
                    yield equal_case({"n": n, "k": k}, special_value(n, k), poly_euler2(n, -k))

    def stirling_forms() -> Iterator[Case]:
        for n in range(nmax + 1):
            for j in range(n + 1):
                yield equal_case({"n": n, "j": j}, stirling2(n, j), stirling2_explicit(n, j))

    subclaims = [
        _agreement(
            "oracle/euler",
            swept,
            [SeqFamily(family=Family.EULER)],
            nmax,
            [lambda f, n: Fraction(euler_number(n)), lambda f, n: euler_by_determinant(n)],
        ),
        _agreement(
            "oracle/comp-euler",
            swept,
            [SeqFamily(family=Family.COMP_EULER)],
            nmax,
            [
                lambda f, n: comp_euler(n, CompEulerMethod.RECURRENCE),
                lambda f, n: comp_euler(n, CompEulerMethod.BERNOULLI_IDENTITY),
                lambda f, n: comp_euler_by_determinant(n),
            ],
        ),
        _agreement(
            "oracle/bernoulli-minus",
            swept,
            [SeqFamily(family=Family.BERNOULLI_MINUS)],
            nmax,
            [
                lambda f, n: bernoulli(n, Convention.MINUS),
                lambda f, n: bernoulli_by_determinant(n),
                lambda f, n: bernoulli_polynomial_at(n, Fraction(0)),
            ],
        ),
        _agreement(
            "oracle/bernoulli-plus",
            swept,
            [SeqFamily(family=Family.BERNOULLI_PLUS)],
            nmax,
            [
                lambda f, n: bernoulli(n, Convention.PLUS),
                lambda f, n: bernoulli_polynomial_at(n, Fraction(1)),
            ],
        ),
        _agreement(
            "oracle/poly-bernoulli",
            swept,
            with_k(Family.POLY_BERNOULLI),
            nmax,
            [lambda f, n: poly_bernoulli(n, f.k)],
        ),
        _agreement(
            "oracle/poly-euler",
            swept,
            with_k(Family.POLY_EULER),
            nmax,
            [lambda f, n: poly_euler(n, f.k)],
        ),
        run_claim("oracle/poly-euler2", swept, poly_euler2_methods()),
        run_claim("oracle/special-values", swept, special_values()),
        _agreement(
            "oracle/hyper-euler",
            swept,
            with_big_n(Family.HYPER_EULER),
            nmax,
            [lambda f, n: hyper_euler(f.N, n), lambda f, n: hyper_euler_by_determinant(f.N, n)],
        ),
        _agreement(
            "oracle/hyper-euler2",
            swept,
            with_big_n(Family.HYPER_EULER2),
            nmax,
            [lambda f, n: hyper_euler2(f.N, n), lambda f, n: hyper_euler2_by_determinant(f.N, n)],
        ),
        run_claim("oracle/stirling2", swept, stirling_forms()),
    ]
    return aggregate("oracle", swept, subclaims)
