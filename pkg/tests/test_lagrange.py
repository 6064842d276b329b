import math
from fractions import Fraction

import numpy as np
import pytest

from momentpoly.asymptotics import solve_saddle
from momentpoly.exact import MomentMultiset
from momentpoly.poly import RationalSeries
from momentpoly.series import (
    a_coefficients,
    lagrange_lambda,
    lagrange_lambdas,
    series_logPk,
    series_one_over_u,
    series_u,
    series_U,
)


def test_a_coefficients():
    assert a_coefficients(5, 3) == [0, 1, Fraction(-29, 25), Fraction(37, 25)]
    with pytest.raises(ValueError):
        a_coefficients(0, 3)


@pytest.mark.parametrize("k", [1, 2, 5, 10])
def test_first_lambdas(k):
    a = a_coefficients(k, 3)
    assert lagrange_lambda(1, k) == 1
    assert lagrange_lambda(2, k) == -a[2]
    assert lagrange_lambda(3, k) == 2 * a[2] ** 2 - a[3]


def test_lambda_values():
    assert lagrange_lambda(2, 5) == Fraction(29, 25)
    assert lagrange_lambda(3, 5) == Fraction(757, 625)
    assert lagrange_lambdas(5, 3) == [0, 1, Fraction(29, 25), Fraction(757, 625)]

    with pytest.raises(ValueError):
        lagrange_lambda(0, 5)


def test_one_over_u_is_reciprocal_of_u():
    product = series_one_over_u(6, 5) * series_u(6, 5)
    assert product.coefficients == (1, 0, 0, 0, 0, 0)


K, R = 30, 5


@pytest.fixture(scope="module")
def saddle():
    return solve_saddle(K, R)


def test_series_u(saddle):
    x = Fraction(R, K * K)
    u = float(series_u(K, 6)(x)) * K ** 3 / R
    assert u == pytest.approx(saddle.u, rel=1e-9)


def test_series_U(saddle):
    x = Fraction(R, K * K)
    assert R * float(series_U(K, 6)(x)) == pytest.approx(saddle.U, rel=1e-9)


def test_series_logPk(saddle):
    x = Fraction(R, K * K)
    js, mults = MomentMultiset(K).arrays()
    expected = math.fsum(mults * np.log1p(js / saddle.u))
    assert R * float(series_logPk(K, 6)(x)) == pytest.approx(expected, rel=1e-9)


def test_series_truncation_converges(saddle):
    x = Fraction(R, K * K)
    errors = [abs(float(series_u(K, J)(x)) * K ** 3 / R - saddle.u) for J in (1, 2, 3)]
    assert errors[0] > errors[1] > errors[2]


# Coefficient of x^n as (sign, numerator in descending powers of k^2, denominator);
# the coefficient is sign * numerator(k^2) / (denominator * k^(2n)).
PRINTED = {
    series_one_over_u: [
        (1, [1], 1),
        (1, [7, -1], 6),
        (1, [22, -5, 1], 18),
        (1, [1357, -435, 183, -25], 1080),
        (1, [4142, -1661, 1083, -359, 35], 3240),
        (1, [58691, -28609, 27146, -14906, 3283, -245], 45360),
        (1, [888146, -506685, 640353, -512890, 201576, -32025, 1925], 680400),
    ],
    series_u: [
        (1, [1], 1),
        (-1, [7, -1], 6),
        (1, [5, -4, -1], 36),
        (1, [4, 15, -24, 5], 540),
        (1, [59, -152, -114, 232, -25], 6480),
        (1, [92, 329, -2128, 2302, -644, 49], 27216),
        (1, [3101, -10620, -43827, 157640, -125649, 20580, -1225], 1360800),
    ],
    series_U: [
        (1, [1], 1),
        (-1, [7, -1], 6),
        (1, [5, -4, -1], 18),
        (-1, [151, -255, 129, -25], 1080),
        (1, [187, -706, 168, 386, -35], 3240),
        (-1, [1373, -9415, 18956, -14540, 3871, -245], 45360),
        (1, [7777, -114000, 158361, 190960, -279813, 38640, -1925], 680400),
    ],
    series_logPk: [
        (1, [1], 1),
        (1, [7, -1], 12),
        (1, [13, -2, 1], 36),
        (1, [583, -165, 147, -25], 2160),
        (1, [1379, -428, 642, -332, 35], 6480),
        (1, [3193, -1393, 3178, -2542, 637, -49], 18144),
        (1, [203849, -100470, 307587, -379420, 192639, -31710, 1925], 1360800),
    ],
}


def printed_coefficient(entry, k: int) -> Fraction:
    sign, numerator, denominator = entry
    n = len(numerator) - 1
    k2 = k * k
    value = sum(c * k2 ** (n - i) for i, c in enumerate(numerator))
    return Fraction(sign * value, denominator * k2 ** n)


@pytest.mark.parametrize("series", list(PRINTED), ids=lambda f: f.__name__)
@pytest.mark.parametrize("k", [2, 3, 5, 7])
def test_series_match_printed_coefficients(series, k):
    expected = [printed_coefficient(entry, k) for entry in PRINTED[series]]
    assert list(series(k, 6).coefficients) == expected


@pytest.mark.parametrize("k", [2, 5, 7])
@pytest.mark.parametrize("J", range(1, 9))
def test_lambdas_invert_the_saddle_equation(k, J):
    a = RationalSeries(a_coefficients(k, J), J)
    lambdas = RationalSeries(lagrange_lambdas(k, J), J)
    assert a.compose(lambdas) == RationalSeries([0, 1], J)
    assert lambdas.compose(a) == RationalSeries([0, 1], J)
