"""Series in x = r/k^2 for the saddle point quantities at a fixed integer k.

With y = k/u the saddle equation reads sum_m a_m y^m = x where
a_m = (-1)^(m+1) p_m(k)/k^(m+2) and a_1 = 1; Lagrange inversion gives
y = sum_m lambda_m x^m and everything else follows by series arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Tuple

from ..exact import power_sum
from ..poly import RationalSeries
from .expansions import check_order


def a_coefficients(k: int, J: int) -> List[Fraction]:
    """[0, a_1, ..., a_J]."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return [Fraction(0)] + [
        Fraction((-1) ** (i + 1) * power_sum(i, k), k ** (i + 2)) for i in range(1, J + 1)
    ]


@lru_cache(maxsize=None)
def _lambdas(k: int, order: int) -> Tuple[Fraction, ...]:
    return RationalSeries(a_coefficients(k, order), order).reversion().coefficients


def lagrange_lambdas(k: int, J: int) -> List[Fraction]:
    """[0, lambda_1, ..., lambda_J]."""
    if J < 1:
        raise ValueError(f"J must be >= 1, got {J}")
    check_order(J)
    return list(_lambdas(k, J))


def lagrange_lambda(m: int, k: int) -> Fraction:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return lagrange_lambdas(k, m)[m]


def series_one_over_u(k: int, J: int) -> RationalSeries:
    """(1/u) (k^3/r) = sum_n lambda_(n+1) x^n."""
    if J < 1:
        raise ValueError(f"J must be >= 1, got {J}")
    check_order(J)
    return RationalSeries(_lambdas(k, J + 1)[1:], J)


def series_u(k: int, J: int) -> RationalSeries:
    """u r/k^3 as a series in x."""
    return series_one_over_u(k, J).reciprocal()


def _power_sum_over_u(k: int, J: int, weight: Callable[[int], Fraction]) -> RationalSeries:
    """(1/r) sum_m (-1)^(m-1) weight(m) p_m / u^m as a series in x.

    Since 1/u^m = r x^(m-1) S(x)^m / k^(m+2) with S = series_one_over_u, this is
    C(x S)/x for C(t) = sum_m (-1)^(m-1) weight(m) p_m t^m / k^(m+2).
    """
    inverse = series_one_over_u(k, J)
    inner = RationalSeries([Fraction(0)] + list(inverse.coefficients), J + 1)
    outer = RationalSeries(
        [Fraction(0)]
        + [
            (-1) ** (m - 1) * weight(m) * Fraction(power_sum(m, k), k ** (m + 2))
            for m in range(1, J + 2)
        ],
        J + 1,
    )
    return outer.compose(inner).shift_down(1)


def series_U(k: int, J: int) -> RationalSeries:
    """U/r with U = sum_m (-1)^(m-1) m p_m / u^m."""
    return _power_sum_over_u(k, J, lambda m: Fraction(m))


def series_logPk(k: int, J: int) -> RationalSeries:
    """(1/r) log(P_k(u) / (c_0 u^(k^2))) = (1/r) sum_m (-1)^(m-1) p_m / (m u^m)."""
    return _power_sum_over_u(k, J, lambda m: Fraction(1, m))
