from ..poly import bernoulli_polynomial
from .types import BigRational, MomentMultiset, ExactCoefficientTable, TableMethod
from .tools import (
    power_sum,
    power_sum_closed,
    power_sum_polynomial,
    leading_coefficient,
    int_to_decimal,
    decimal_to_int,
)
from .product import expand_product, mul_kronecker
from .cache import TableCache, resolve_cache_dir
from .coefficients import (
    newton_coefficients,
    coefficient_table,
    clear_tables,
    coefficient,
    evaluate,
    argmax_exact,
    unimodality_peak,
    moment_b_polynomial,
)

import logging
from logging import NullHandler

logging.getLogger(__name__).addHandler(NullHandler())
