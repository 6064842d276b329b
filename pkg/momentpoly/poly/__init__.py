from .polynomial import RationalPolynomial, Scalar
from .series import RationalSeries
from .bernoulli import (
    bernoulli_numbers,
    bernoulli_polynomial,
    bernoulli_value,
    sum_of_powers,
    indefinite_sum,
)

import logging
from logging import NullHandler

logging.getLogger(__name__).addHandler(NullHandler())
