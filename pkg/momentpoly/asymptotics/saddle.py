from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.optimize import root_scalar
from scipy.special import gammaln

from ..errors import EndpointExcluded
from ..exact import MomentMultiset
from .types import SaddleData

ZETA_PRIME_MINUS_ONE = -0.16542114370045092
MAX_ITERATIONS = 200


def check_interior(k: int, r: int):
    if not 0 < r < k * k:
        raise EndpointExcluded(k, r)


@lru_cache(maxsize=256)
def _arrays(k: int) -> Tuple[np.ndarray, np.ndarray]:
    return MomentMultiset(k).arrays()


def h(k: int, x: float) -> float:
    """x sum_j mult(j)/(x + j); increases from 0 to k^2 on (0, inf)."""
    js, mults = _arrays(k)
    return x * math.fsum(mults / (x + js))


def h_complement(k: int, x: float) -> float:
    """k^2 - h(x) = sum_j mult(j) j/(x + j), without the cancellation."""
    js, mults = _arrays(k)
    return math.fsum(mults * js / (x + js))


def h_prime(k: int, x: float) -> float:
    js, mults = _arrays(k)
    return math.fsum(mults * js / (x + js) ** 2)


def a_const(k: int) -> float:
    """A = 2 sum_{j=k+1}^{2k} 1/j."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return 2 * math.fsum(1 / j for j in range(k + 1, 2 * k + 1))


def log_c0(k: int) -> float:
    """log c_0(k) = sum_{j<k} log j! - log (j+k)!."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")

    j = np.arange(k, dtype=np.float64)
    return math.fsum(gammaln(j + 1) - gammaln(j + k + 1))


def log_c0_asymptotic(k: int, as_printed: bool = False) -> float:
    """Large-k expansion of log c_0(k):

        -k^2 log k - k^2 log 4 + 3k^2/2 - (log k)/12 + (log 2)/12 + zeta'(-1)

    with error O(1/k^2). ``as_printed`` drops the (log 2)/12 term, which leaves
    a constant offset.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")

    value = (
        -k * k * math.log(k)
        - k * k * math.log(4)
        + 1.5 * k * k
        - math.log(k) / 12
        + ZETA_PRIME_MINUS_ONE
    )
    if not as_printed:
        value += math.log(2) / 12
    return value


def log_Pk_at(k: int, u: float) -> float:
    """log P_k(u) for u >= 0.

    Written as sum_j mult(j) log(1 + u/j), which equals
    log c_0 + sum_j mult(j) log(u + j) because c_0 prod_j j^mult(j) = 1.
    """
    if u < 0:
        raise ValueError(f"u must be non-negative, got {u}")

    js, mults = _arrays(k)
    return math.fsum(mults * np.log1p(u / js))


def tail_pilot(k: int, r: int) -> Tuple[float, float]:
    """Leading-order (u, U) in the two tails: (k^2-r)/(kA) and k^2-r above
    k^2/2, k^3/r and r below."""
    check_interior(k, r)

    s = k * k - r
    if 2 * r > k * k:
        return s / (k * a_const(k)), float(s)
    return k ** 3 / r, float(r)


def _bracket(residual, lo: float, hi: float) -> Tuple[float, float]:
    """Widen [lo, hi] until the residual changes sign."""
    for _ in range(MAX_ITERATIONS):
        f_lo, f_hi = residual(lo), residual(hi)
        if f_lo == 0 or f_hi == 0 or (f_lo > 0) != (f_hi > 0):
            return lo, hi
        if abs(f_lo) < abs(f_hi):
            lo /= 2
        else:
            hi *= 2

    raise ArithmeticError(f"Could not bracket the saddle point in [{lo}, {hi}]")


def solve_saddle(k: int, r: int) -> SaddleData:
    """Solve h(u) = k^2 - r by Newton's method from the tail pilot, falling back
    to Brent's method on a bracket around it."""
    check_interior(k, r)

    target = k * k - r
    # Below the middle h(u) is close to k^2, so solve its complement instead.
    if 2 * r <= k * k:

        def residual(x):
            return h_complement(k, x) - r

        def slope(x):
            return -h_prime(k, x)

    else:

        def residual(x):
            return h(k, x) - target

        def slope(x):
            return h_prime(k, x)

    u_pilot, _ = tail_pilot(k, r)
    lo, hi = max(1e-9, u_pilot / 4), 4 * u_pilot + 4 * k
    tolerance = 1e-10 * k * k

    u = None
    try:
        result = root_scalar(
            residual,
            x0=u_pilot,
            fprime=slope,
            method="newton",
            xtol=1e-300,
            rtol=1e-13,
            maxiter=MAX_ITERATIONS,
        )
        if result.converged and result.root > 0 and abs(residual(result.root)) <= tolerance:
            u = result.root
    except (RuntimeError, ZeroDivisionError, FloatingPointError):
        pass

    if u is None:
        logging.debug("Newton failed, bracketing saddle point", extra={"k": k, "r": r})
        lo, hi = _bracket(residual, lo, hi)
        result = root_scalar(
            residual,
            bracket=[lo, hi],
            method="brentq",
            xtol=1e-300,
            rtol=4 * np.finfo(float).eps,
            maxiter=MAX_ITERATIONS,
        )
        u = result.root
        if abs(residual(u)) > tolerance:
            logging.warning(
                "Saddle residual above tolerance",
                extra={"k": k, "r": r, "residual": residual(u)},
            )

    U = u * h_prime(k, u)
    f_at_u = log_Pk_at(k, u) - target * math.log(u)
    return SaddleData(k=k, r=r, u=u, U=U, f_at_u=f_at_u)
