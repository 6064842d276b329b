from __future__ import annotations

import math
from fractions import Fraction
from typing import Tuple

import numpy as np

from ..exact import MomentMultiset
from .saddle import check_interior, solve_saddle

SIGN_TOLERANCE = 1e-12


def mu_location(k: int) -> Tuple[Fraction, float]:
    """mu = h(1) = sum_j mult(j)/(j + 1); the largest coefficient sits near
    r = k^2 - mu."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")

    mu = sum((Fraction(mult, j + 1) for j, mult in MomentMultiset(k).items()), Fraction(0))
    return mu, float(mu)


def mu_asymptotic(k: int) -> float:
    """k log 4 - log(k/2) - 1/2 - Euler's gamma, with error O(1/k)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return k * math.log(4) - math.log(k / 2) - 0.5 - float(np.euler_gamma)


def h_prime_at_one(k: int) -> Tuple[Fraction, float]:
    """h'(1) = sum_j mult(j) j/(j + 1)^2."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")

    value = sum(
        (Fraction(mult * j, (j + 1) ** 2) for j, mult in MomentMultiset(k).items()),
        Fraction(0),
    )
    return value, float(value)


def predicted_max_interval(k: int, rho: float = 1.0) -> Tuple[float, float]:
    """[k^2 - mu - rho log(k)^2/k, k^2 - mu + 1 + rho log(k)^2/k]."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if rho <= 0:
        raise ValueError(f"rho must be positive, got {rho}")

    _, mu = mu_location(k)
    centre = k * k - mu
    slack = rho * math.log(k) ** 2 / k
    return centre - slack, centre + 1 + slack


def guard_band(k: int) -> float:
    """Half-width around u = 1 inside which the leading-order sign of
    c_(r+1) - c_r is not trusted."""
    return 10 * math.log(k) ** 2 / k ** 2


def delta_sign_estimate(k: int, r: int) -> int:
    """Predicted sign of c_(r+1) - c_r, that of (u - 1)(1 + u/(2U))."""
    check_interior(k, r)

    saddle = solve_saddle(k, r)
    if abs(saddle.u - 1) < SIGN_TOLERANCE:
        return 0
    return 1 if saddle.u > 1 else -1
