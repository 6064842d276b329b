from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from gmpy2 import mpz

from ..poly import RationalPolynomial, bernoulli_polynomial, bernoulli_value
from .types import MomentMultiset


def power_sum(n: int, k: int) -> int:
    """p_n(k) by direct summation over the moment multiset."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    return sum(m * j ** n for j, m in MomentMultiset(k).items())


def power_sum_closed(n: int, k: int) -> int:
    """p_n(k) from Bernoulli polynomials:

        (2 B_{n+2}(k+1) - B_{n+2}(2k) - B_{n+2}(1)) / (n+2)
            + 2k (B_{n+1}(2k) - B_{n+1}(k+1)) / (n+1)

    The formula is a polynomial in k, so any integer k is accepted.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    first = (
        2 * bernoulli_value(n + 2, k + 1)
        - bernoulli_value(n + 2, 2 * k)
        - bernoulli_value(n + 2, 1)
    ) / (n + 2)
    second = 2 * k * (bernoulli_value(n + 1, 2 * k) - bernoulli_value(n + 1, k + 1)) / (n + 1)

    value = first + second
    if value.denominator != 1:
        raise ArithmeticError(f"p_{n}({k}) evaluated to non-integer {value}")
    return value.numerator


@lru_cache(maxsize=None)
def power_sum_polynomial(n: int) -> RationalPolynomial:
    """p_n(k) as an exact polynomial in k."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    outer = bernoulli_polynomial(n + 2, "k")
    inner = bernoulli_polynomial(n + 1, "k")
    k = RationalPolynomial.identity("k")

    first = (2 * outer.shift(1) - outer.scale(2) - outer(1)) / (n + 2)
    second = 2 * k * (inner.scale(2) - inner.shift(1)) / (n + 1)
    return first + second


def leading_coefficient(k: int) -> Fraction:
    """c_0(k) = prod_{j=0}^{k-1} j! / (j+k)!."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")

    return Fraction(
        prod(factorial(j) for j in range(k)),
        prod(factorial(j + k) for j in range(k)),
    )


def int_to_decimal(value: int) -> str:
    """Decimal digits of an arbitrarily large integer (str() refuses very long ints)."""
    return mpz(value).digits(10)


def decimal_to_int(text: str) -> int:
    return int(mpz(text.strip(), 10))
