from .expansions import (
    MAX_ORDER,
    check_order,
    power_sum_part,
    g_polynomial,
    b_expansion_term,
    F_series,
    q_polynomial,
    q_tilde_polynomial,
    exponent_series,
    nu_coefficients,
    nu_expansion,
    eta_moment,
    beta_coefficients,
    beta_expansion,
)
from .lagrange import (
    a_coefficients,
    lagrange_lambda,
    lagrange_lambdas,
    series_one_over_u,
    series_u,
    series_U,
    series_logPk,
)

import logging
from logging import NullHandler

logging.getLogger(__name__).addHandler(NullHandler())
