"""Polynomials in r for the large-k expansion of b_r(k).

For fixed j, the coefficient of k^(3r-2j) in b_r(k) is g_j(r)/r! with g_j a
polynomial of degree at most 2j. Newton's identities turn into the first order
difference equation g_j(r) - g_j(r-1) = h_j(r), where h_j only involves
g_0..g_(j-1), so every g_j is an indefinite sum plus one constant.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Tuple

from ..errors import OrderLimitExceeded
from ..exact import moment_b_polynomial, power_sum_polynomial
from ..poly import (
    RationalPolynomial,
    RationalSeries,
    bernoulli_polynomial,
    indefinite_sum,
)

MAX_ORDER = 12
MAX_EXPANSION_TERM = 6


def check_order(order: int, limit: int = MAX_ORDER):
    if order > limit:
        raise OrderLimitExceeded(order, limit)


@lru_cache(maxsize=None)
def power_sum_part(n: int, a: int) -> Fraction:
    """p_{n,a}: coefficient of k^(n+2-2a) in p_n(k)."""
    return power_sum_polynomial(n).coefficient(n + 2 - 2 * a)


def _difference(j: int) -> RationalPolynomial:
    """h_j(r) = sum over (n, a) != (1, 0) of
    (-1)^(n-1) p_{n,a} (r-1)...(r-n+1) g_{j+1-n-a}(r-n)."""
    h = RationalPolynomial()
    for n in range(1, j + 2):
        falling = RationalPolynomial.falling_factorial(n - 1, shift=1)
        for a in range(0, j + 2 - n):
            if (n, a) == (1, 0):
                continue
            c = power_sum_part(n, a)
            if c == 0:
                continue

            term = falling * g_polynomial(j + 1 - n - a).shift(-n) * c
            h = h + term if n % 2 else h - term
    return h


@lru_cache(maxsize=None)
def g_polynomial(j: int) -> RationalPolynomial:
    """g_j(r) with b_{r,j} = g_j(r)/r!."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    check_order(j)
    if j == 0:
        return RationalPolynomial.constant(1)

    partial = indefinite_sum(_difference(j))

    # Smallest r where k^(3r-2j) can appear in b_r(k).
    r0 = (2 * j + 2) // 3
    exact = moment_b_polynomial(r0).coefficient(3 * r0 - 2 * j) * factorial(r0)
    return partial + (exact - partial(r0))


def b_expansion_term(j: int) -> Tuple[RationalPolynomial, int]:
    """(N, m) with b_{r,j} = N(r)/(r-m)!, m as large as possible.

    N carries the sign of the term, e.g. j=1 gives (-7/12, 2).
    """
    if not 0 <= j <= MAX_EXPANSION_TERM:
        raise ValueError(f"j must lie in 0..{MAX_EXPANSION_TERM}, got {j}")

    g = g_polynomial(j)
    shift = 0
    while shift <= g.degree and g(shift) == 0:
        shift += 1

    numerator, remainder = divmod(g, RationalPolynomial.falling_factorial(shift))
    assert remainder.is_zero()
    return numerator, shift


def F_series(J: int) -> RationalSeries:
    """F_r(z) = 1 + sum_{j=1}^{J} g_j(r) z^j, where z = 1/k^2."""
    if J < 1:
        raise ValueError(f"J must be >= 1, got {J}")
    check_order(J)
    return RationalSeries([g_polynomial(j) for j in range(J + 1)], J)


@lru_cache(maxsize=None)
def q_polynomial(j: int) -> RationalPolynomial:
    """q_j(r) = -[z^j] log F_r(z)."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return -F_series(j).log()[j]


@lru_cache(maxsize=None)
def q_tilde_polynomial(j: int) -> RationalPolynomial:
    """q_j(r) - (B_{j+1}(r) - B_{j+1}(1)) / ((j+1) j), the exponent of the
    binomial form k^r C(k^2, r) exp(-sum q~_j / k^(2j))."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")

    bernoulli = bernoulli_polynomial(j + 1, "r")
    return q_polynomial(j) - (bernoulli - bernoulli(1)) / ((j + 1) * j)


def exponent_series(J: int, binomial: bool = False) -> RationalSeries:
    """sum_j q_j(r) z^j (or the q~ variant) truncated at J, constant term 0."""
    check_order(J)
    polynomial = q_tilde_polynomial if binomial else q_polynomial
    return RationalSeries(
        [RationalPolynomial()] + [polynomial(j) for j in range(1, J + 1)], J
    )


def nu_coefficients(k: int, M: int) -> List[Fraction]:
    """nu_0..nu_M, coefficients of exp(sum_{m>=2} (-1)^(m+1) p_m(k) x^m / m)."""
    check_order(M)
    logarithm = [Fraction(0), Fraction(0)] + [
        Fraction((-1) ** (m + 1) * power_sum_polynomial(m)(k), m) for m in range(2, M + 1)
    ]
    return list(RationalSeries(logarithm, M).exp().coefficients)


def nu_expansion(k: int, r: int, M: int) -> Fraction:
    """sum_{m=0}^{min(r, M)} k^(3(r-m)) nu_m / (r-m)!, equal to b_r(k) once M >= r."""
    nu = nu_coefficients(k, M)
    return sum(
        (Fraction(k ** (3 * (r - m)), factorial(r - m)) * nu[m] for m in range(min(r, M) + 1)),
        Fraction(0),
    )


def eta_moment(m: int, k: int) -> Fraction:
    """eta_m = sum_{j<=k} j^(1-m) + sum_{k<j<=2k} (2k-j) j^(-m); eta_1 = kA."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    total = sum((Fraction(j, j ** m) for j in range(1, k + 1)), Fraction(0))
    total += sum((Fraction(2 * k - j, j ** m) for j in range(k + 1, 2 * k)), Fraction(0))
    return total


def beta_coefficients(k: int, N: int) -> List[Fraction]:
    """beta_0..beta_N, coefficients of exp(sum_{m>=2} (-1)^(m+1) eta_m x^m / m)."""
    check_order(N)
    logarithm = [Fraction(0), Fraction(0)] + [
        (-1) ** (m + 1) * eta_moment(m, k) / m for m in range(2, N + 1)
    ]
    return list(RationalSeries(logarithm, N).exp().coefficients)


def beta_expansion(k: int, s: int, N: int) -> Fraction:
    """sum_{n=0}^{min(s, N)} eta_1^(s-n) beta_n / (s-n)!, equal to c_{k^2-s}(k)
    once N >= s."""
    beta = beta_coefficients(k, N)
    eta = eta_moment(1, k)
    return sum(
        (eta ** (s - n) / factorial(s - n) * beta[n] for n in range(min(s, N) + 1)),
        Fraction(0),
    )
