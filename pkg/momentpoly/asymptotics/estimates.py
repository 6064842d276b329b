from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from scipy.special import gamma as gamma_function
from scipy.special import gammaln

from ..errors import CorrectionDiverged, IndexOutOfRange
from ..exact import ExactCoefficientTable, leading_coefficient
from ..series import nu_expansion, beta_expansion, q_polynomial, q_tilde_polynomial
from .gamma import gamma_series
from .logvalue import LogValue
from .saddle import a_const, check_interior, solve_saddle
from .types import Estimator, SaddleData, TailForm, UniformForm

MAX_PRECISE_ORDER = 8


def _check_index(k: int, r: int):
    if not 0 <= r <= k * k:
        raise IndexOutOfRange(k, r)


def log_binomial(n: int, m: int) -> float:
    return float(gammaln(n + 1) - gammaln(m + 1) - gammaln(n - m + 1))


@lru_cache(maxsize=256)
def log_leading_coefficient(k: int) -> LogValue:
    return LogValue.from_rational(leading_coefficient(k))


def log_exact_coefficient(table: ExactCoefficientTable, r: int) -> LogValue:
    """c_r(k) = c_0 b_r in log domain, without forming the rational product."""
    return LogValue.from_rational(table.ratio(r)) * LogValue.from_rational(table.c0)


def saddle_estimate(k: int, r: int, saddle: Optional[SaddleData] = None) -> LogValue:
    """P_k(u) / (sqrt(2 pi U) u^(k^2-r))."""
    check_interior(k, r)
    if saddle is None:
        saddle = solve_saddle(k, r)
    return LogValue.from_log(saddle.f_at_u - 0.5 * math.log(2 * math.pi * saddle.U))


def saddle_correction(k: int, r: int, M: int = 7, saddle: Optional[SaddleData] = None) -> float:
    """1 + sum_{m=2}^{(M-1)//2} 2^m Gamma(m+1/2) mu_(2m) / (sqrt(pi) U^m)."""
    if M < 5:
        raise ValueError(f"M must be >= 5, got {M}")

    top = (M - 1) // 2
    series = gamma_series(k, r, 2 * top, saddle)
    U = series.U
    terms = [
        2 ** m * gamma_function(m + 0.5) * series.mu(2 * m).real / (math.sqrt(math.pi) * U ** m)
        for m in range(2, top + 1)
    ]
    return 1 + math.fsum(terms)


def corrected_saddle_estimate(k: int, r: int, M: int = 7) -> LogValue:
    saddle = solve_saddle(k, r)
    bracket = saddle_correction(k, r, M, saddle)
    if bracket <= 0:
        logging.warning(
            "Saddle correction diverged", extra={"k": k, "r": r, "M": M, "bracket": bracket}
        )
        raise CorrectionDiverged(k, r, M, bracket)
    return saddle_estimate(k, r, saddle) * LogValue.from_float(bracket)


def uniform_estimate(
    k: int, r: int, form: UniformForm = UniformForm.STIRLING, saddle: Optional[SaddleData] = None
) -> LogValue:
    """Saddle point estimate rescaled so it stays accurate for every 0 < r < k^2."""
    check_interior(k, r)
    if saddle is None:
        saddle = solve_saddle(k, r)

    n = k * k
    s = n - r
    core = log_binomial(n, r) + saddle.f_at_u - 0.5 * math.log(saddle.U)
    if form is UniformForm.RATIO:
        log_value = (
            core
            + r * math.log(r / n)
            + (s + 0.5) * math.log1p(-r / n)
            + 0.5 * math.log(r)
        )
    else:
        log_value = (
            core
            + 0.5 * math.log(2 * math.pi)
            - n
            - float(gammaln(n + 1))
            + (s + 0.5) * math.log(s)
            + (r + 0.5) * math.log(r)
        )
    return LogValue.from_log(log_value)


def tail_low_estimate(k: int, r: int, form: TailForm = TailForm.FACTORIAL) -> LogValue:
    """c_0 k^(3r)/r! or c_0 C(k^2, r) k^r."""
    _check_index(k, r)
    if form is TailForm.FACTORIAL:
        log_value = 3 * r * math.log(k) - float(gammaln(r + 1))
    else:
        log_value = log_binomial(k * k, r) + r * math.log(k)
    return log_leading_coefficient(k) * LogValue.from_log(log_value)


def tail_high_estimate(k: int, s: int, form: TailForm = TailForm.FACTORIAL) -> LogValue:
    """Estimate of c_(k^2-s): (kA)^s/s! or C(k^2, s)(A/k)^s."""
    _check_index(k, s)
    A = a_const(k)
    if form is TailForm.FACTORIAL:
        log_value = s * math.log(k * A) - float(gammaln(s + 1))
    else:
        log_value = log_binomial(k * k, s) + s * math.log(A / k)
    return LogValue.from_log(log_value)


def expansion_exponent(k: int, r: int, J: int, binomial: bool = False) -> Fraction:
    """sum_{j=1}^{J} q_j(r)/k^(2j), exactly."""
    polynomial = q_tilde_polynomial if binomial else q_polynomial
    return sum((polynomial(j)(r) / k ** (2 * j) for j in range(1, J + 1)), Fraction(0))


def precise_expansion_estimate(k: int, r: int, J: int = 4, binomial: bool = False) -> LogValue:
    """c_0 k^(3r)/r! exp(-sum q_j(r)/k^(2j)), or with ``binomial`` the form
    c_0 k^r C(k^2, r) exp(-sum q~_j(r)/k^(2j))."""
    if not 1 <= J <= MAX_PRECISE_ORDER:
        raise ValueError(f"J must lie in 1..{MAX_PRECISE_ORDER}, got {J}")
    _check_index(k, r)

    form = TailForm.BINOMIAL if binomial else TailForm.FACTORIAL
    exponent = float(expansion_exponent(k, r, J, binomial))
    return tail_low_estimate(k, r, form) * LogValue.from_log(-exponent)


def nu_expansion_estimate(k: int, r: int, M: int) -> LogValue:
    """c_0 sum_{m<=M} k^(3(r-m)) nu_m/(r-m)!; exact once M >= r."""
    _check_index(k, r)
    return log_leading_coefficient(k) * LogValue.from_rational(nu_expansion(k, r, M))


def beta_expansion_estimate(k: int, s: int, N: int) -> LogValue:
    """Estimate of c_(k^2-s) from the trailing expansion; exact once N >= s."""
    _check_index(k, s)
    return LogValue.from_rational(beta_expansion(k, s, N))


def delta_estimate(k: int, r: int, saddle: Optional[SaddleData] = None) -> LogValue:
    """Leading term of c_(r+1) - c_r: the saddle estimate times (u-1)(1 + u/(2U))."""
    if saddle is None:
        saddle = solve_saddle(k, r)
    factor = (saddle.u - 1) * (1 + saddle.u / (2 * saddle.U))
    return saddle_estimate(k, r, saddle) * LogValue.from_float(factor)


def estimate(
    estimator: Estimator,
    k: int,
    r: int,
    J: int = 4,
    M: int = 7,
    form: TailForm = TailForm.BINOMIAL,
    uniform_form: UniformForm = UniformForm.STIRLING,
) -> LogValue:
    """Estimate of c_r(k) by the named method."""
    if estimator is Estimator.TAIL_LOW:
        return tail_low_estimate(k, r, form)
    if estimator is Estimator.TAIL_HIGH:
        return tail_high_estimate(k, k * k - r, form)
    if estimator is Estimator.PRECISE:
        return precise_expansion_estimate(k, r, J)
    if estimator is Estimator.SADDLE:
        return saddle_estimate(k, r)
    if estimator is Estimator.CORRECTED:
        return corrected_saddle_estimate(k, r, M)
    if estimator is Estimator.UNIFORM:
        return uniform_estimate(k, r, uniform_form)

    raise ValueError(f"Unknown estimator: {estimator}")
