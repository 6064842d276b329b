from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple

from .polynomial import RationalPolynomial

__all__ = [
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "bernoulli_value",
    "sum_of_powers",
    "indefinite_sum",
]


@lru_cache(maxsize=None)
def _bernoulli_numbers(n: int) -> Tuple[Fraction, ...]:
    if n == 0:
        return (Fraction(1),)

    previous = _bernoulli_numbers(n - 1)
    # sum_{i<=n} C(n+1, i) B_i = 0
    total = sum(comb(n + 1, i) * b for i, b in enumerate(previous))
    return previous + (Fraction(-total, n + 1),)


def bernoulli_numbers(n: int) -> List[Fraction]:
    """Bernoulli numbers B_0..B_n as exact Fractions, with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")

    # Fill the cache bottom-up so deep n never hits the recursion limit.
    for m in range(0, n + 1, 256):
        _bernoulli_numbers(m)
    return list(_bernoulli_numbers(n))


@lru_cache(maxsize=None)
def bernoulli_polynomial(m: int, variable: str = "x") -> RationalPolynomial:
    """B_m(x) = sum_i C(m, i) B_i x^(m - i)."""
    if m < 0:
        raise ValueError("m must be >= 0")

    numbers = bernoulli_numbers(m)
    return RationalPolynomial(
        [comb(m, power) * numbers[m - power] for power in range(m + 1)], variable
    )


def bernoulli_value(m: int, x) -> Fraction:
    """B_m(x) at a rational point."""
    return bernoulli_polynomial(m)(Fraction(x))


@lru_cache(maxsize=None)
def sum_of_powers(m: int, variable: str = "r") -> RationalPolynomial:
    """Faulhaber polynomial S(r) = 1^m + 2^m + ... + r^m."""
    bernoulli = bernoulli_polynomial(m + 1, variable)
    return (bernoulli.shift(1) - bernoulli(1)) / (m + 1)


def indefinite_sum(polynomial: RationalPolynomial) -> RationalPolynomial:
    """S(r) = sum_{i=1}^{r} p(i) as a polynomial in r, so S(r) - S(r-1) = p(r)
    and S(0) = 0."""
    result = RationalPolynomial((), polynomial.variable)
    for power, c in enumerate(polynomial.coefficients):
        if c:
            result = result + sum_of_powers(power, polynomial.variable) * c
    return result
