from .logvalue import LogValue, ZERO, ONE, ratio
from .types import TailForm, UniformForm, Estimator, SaddleData, GammaSeries
from .saddle import (
    ZETA_PRIME_MINUS_ONE,
    check_interior,
    h,
    h_complement,
    h_prime,
    a_const,
    log_c0,
    log_c0_asymptotic,
    log_Pk_at,
    tail_pilot,
    solve_saddle,
)
from .gamma import MAX_GAMMA_ORDER, gamma_series, gamma3_closed
from .estimates import (
    MAX_PRECISE_ORDER,
    log_binomial,
    log_leading_coefficient,
    log_exact_coefficient,
    saddle_estimate,
    saddle_correction,
    corrected_saddle_estimate,
    uniform_estimate,
    tail_low_estimate,
    tail_high_estimate,
    expansion_exponent,
    precise_expansion_estimate,
    nu_expansion_estimate,
    beta_expansion_estimate,
    delta_estimate,
    estimate,
)
from .maximum import (
    mu_location,
    mu_asymptotic,
    h_prime_at_one,
    predicted_max_interval,
    guard_band,
    delta_sign_estimate,
)

import logging
from logging import NullHandler

logging.getLogger(__name__).addHandler(NullHandler())
