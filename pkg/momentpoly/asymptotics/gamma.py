from __future__ import annotations

import math
from typing import Optional

import numpy as np

from ..errors import OrderLimitExceeded
from .saddle import _arrays, check_interior, solve_saddle
from .types import GammaSeries, SaddleData

MAX_GAMMA_ORDER = 16


def _truncated_mul(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    return np.convolve(a, b)[: order + 1]


def _formal_exp(series: np.ndarray) -> np.ndarray:
    """exp of a power series with zero constant term."""
    result = np.zeros_like(series)
    result[0] = 1
    for n in range(1, len(series)):
        i = np.arange(1, n + 1)
        result[n] = np.sum(i * series[i] * result[n - i]) / n
    return result


def gamma_series(
    k: int, r: int, N: int = MAX_GAMMA_ORDER, saddle: Optional[SaddleData] = None
) -> GammaSeries:
    """Expand theta -> f(u e^(i theta)) about theta = 0 up to theta^N.

    Each root contributes mult(j) log(1 + t_j (e^(i theta) - 1)) with
    t_j = u/(u+j) on top of the constant log(1 + u/j), so with
    E = e^(i theta) - 1 the whole sum is
    sum_m (-1)^(m+1) T_m E^m / m where T_m = sum_j mult(j) t_j^m.
    """
    check_interior(k, r)
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if N > MAX_GAMMA_ORDER:
        raise OrderLimitExceeded(N, MAX_GAMMA_ORDER)

    if saddle is None:
        saddle = solve_saddle(k, r)
    u = saddle.u
    js, mults = _arrays(k)
    t = u / (u + js)

    e = np.array([1j ** n / math.factorial(n) for n in range(N + 1)], dtype=complex)
    e[0] = 0

    gammas = np.zeros(N + 1, dtype=complex)
    power = e.copy()
    for m in range(1, N + 1):
        weight = math.fsum(mults * t ** m)
        gammas += (-1) ** (m + 1) * weight / m * power
        power = _truncated_mul(power, e, N)

    gammas[0] = saddle.f_at_u
    gammas[1] -= 1j * (k * k - r)

    cubic_and_up = gammas.copy()
    cubic_and_up[:3] = 0
    mus = _formal_exp(cubic_and_up)

    return GammaSeries(k=k, r=r, u=u, U=saddle.U, gammas=gammas, mus=mus)


def gamma3_closed(k: int, u: float) -> complex:
    """(i u / 3!) sum_j mult(j) j (u - j)/(u + j)^3, the third Taylor coefficient
    in closed form."""
    js, mults = _arrays(k)
    return 1j * u / 6 * math.fsum(mults * js * (u - js) / (u + js) ** 3)
