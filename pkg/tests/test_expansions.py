from fractions import Fraction
from math import factorial

import pytest

from momentpoly.errors import OrderLimitExceeded
from momentpoly.exact import coefficient_table, moment_b_polynomial
from momentpoly.poly import RationalPolynomial
from momentpoly.series import (
    F_series,
    b_expansion_term,
    beta_expansion,
    eta_moment,
    exponent_series,
    g_polynomial,
    nu_coefficients,
    nu_expansion,
    power_sum_part,
    q_polynomial,
    q_tilde_polynomial,
)

r = RationalPolynomial.identity("r")
base = r * (r - 1)


def test_g_polynomials():
    assert g_polynomial(0) == 1
    assert g_polynomial(1).to_text() == "-7/12*r^2+7/12*r"
    assert g_polynomial(2) == base * (49 * r ** 2 - 101 * r + 30) / 288


@pytest.mark.parametrize("j", range(0, 5))
def test_g_matches_b_polynomials(j):
    for n in range(1, 9):
        power = 3 * n - 2 * j
        if power < 0:
            continue
        expected = moment_b_polynomial(n).coefficient(power) * factorial(n)
        assert g_polynomial(j)(n) == expected


@pytest.mark.parametrize("j", range(0, 6))
def test_g_degree(j):
    assert g_polynomial(j).degree <= 2 * j


def test_b_expansion_terms():
    assert b_expansion_term(0) == (RationalPolynomial.constant(1), 0)
    assert b_expansion_term(1) == (RationalPolynomial.constant(Fraction(-7, 12)), 2)
    assert b_expansion_term(2) == ((49 * r ** 2 - 101 * r + 30) / 288, 2)
    assert b_expansion_term(3) == (-(1715 * r ** 3 - 5460 * r ** 2 + 4069 * r - 732) / 51840, 3)
    assert b_expansion_term(4) == (
        (12005 * r ** 4 - 52430 * r ** 3 + 69967 * r ** 2 - 22726 * r - 11928) / 2488320,
        4,
    )

    with pytest.raises(ValueError):
        b_expansion_term(7)


def test_q_polynomials():
    assert q_polynomial(1) == 7 * base / 12
    assert q_polynomial(2) == base * (26 * r - 15) / 144
    assert q_polynomial(2).to_text() == "13/72*r^3-41/144*r^2+5/48*r"
    assert q_polynomial(3) == base * (583 * r ** 2 - 715 * r + 183) / 6480
    assert q_polynomial(4) == base * (2758 * r ** 3 - 4499 * r ** 2 + 463 * r + 1491) / 51840


def test_q_tilde_polynomials():
    assert q_tilde_polynomial(1) == base / 12
    assert q_tilde_polynomial(2) == base * (2 * r - 3) / 144
    assert q_tilde_polynomial(3) == base * (43 * r ** 2 - 175 * r + 183) / 6480
    assert q_tilde_polynomial(4) == base * (166 * r ** 3 - 611 * r ** 2 + 31 * r + 1059) / 51840


@pytest.mark.parametrize("j", range(1, 9))
def test_q_vanish_at_zero_and_one_with_full_degree(j):
    for polynomial in (q_polynomial(j), q_tilde_polynomial(j)):
        assert polynomial(0) == 0
        assert polynomial(1) == 0
        assert polynomial.degree == j + 1


def test_exponent_generates_F():
    assert (-exponent_series(6)).exp() == F_series(6)


def test_order_limit():
    with pytest.raises(OrderLimitExceeded):
        g_polynomial(13)
    with pytest.raises(OrderLimitExceeded):
        exponent_series(13)
    with pytest.raises(ValueError):
        q_polynomial(0)


def test_power_sum_parts():
    assert power_sum_part(1, 0) == 1
    assert power_sum_part(2, 0) == Fraction(7, 6)
    assert power_sum_part(2, 1) == Fraction(-1, 6)


def test_nu_coefficients():
    nu = nu_coefficients(5, 3)
    assert nu[0] == 1
    assert nu[1] == 0
    assert nu[2] == -Fraction(725, 2)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_nu_expansion_is_exact_when_complete(k):
    table = coefficient_table(k)
    for n in range(0, min(k * k, 12) + 1):
        assert nu_expansion(k, n, max(n, 1)) == table.b[n]


def test_nu_expansion_converges():
    k, n = 6, 10
    exact = coefficient_table(k).b[n]
    errors = [abs(nu_expansion(k, n, M) - exact) for M in (2, 4, 6, 8)]
    assert errors == sorted(errors, reverse=True)


def test_eta_moments():
    assert eta_moment(1, 2) == 1 + Fraction(2, 2) + Fraction(1, 3)
    with pytest.raises(ValueError):
        eta_moment(0, 2)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_beta_expansion_is_exact_when_complete(k):
    table = coefficient_table(k)
    for s in range(1, min(k * k, 12) + 1):
        assert beta_expansion(k, s, s) == table.coefficient(k * k - s)
