import math

import pytest

from momentpoly.asymptotics import (
    LogValue,
    a_const,
    check_interior,
    h,
    h_complement,
    h_prime,
    log_c0,
    log_c0_asymptotic,
    log_Pk_at,
    solve_saddle,
    tail_pilot,
)
from momentpoly.errors import EndpointExcluded
from momentpoly.exact import leading_coefficient
from momentpoly.series import eta_moment


@pytest.mark.parametrize("r", [0, 49])
def test_endpoints_are_excluded(r):
    with pytest.raises(EndpointExcluded):
        check_interior(7, r)
    with pytest.raises(EndpointExcluded):
        solve_saddle(7, r)
    with pytest.raises(EndpointExcluded):
        tail_pilot(7, r)


def test_h():
    assert h(2, 0.0) == 0
    assert h(2, 1.0) + h_complement(2, 1.0) == pytest.approx(4)
    assert h(2, 1.0) == pytest.approx(1 / 2 + 2 * 1 / 3 + 1 / 4)

    values = [h(7, x) for x in (0.1, 1, 10, 100, 1000)]
    assert values == sorted(values)
    assert values[-1] < 49


def test_h_prime_is_derivative():
    k, x, step = 7, 3.0, 1e-6
    slope = (h(k, x + step) - h(k, x - step)) / (2 * step)
    assert h_prime(k, x) == pytest.approx(slope, rel=1e-6)


@pytest.mark.parametrize("k", [1, 2, 7, 20])
def test_a_const(k):
    assert k * a_const(k) == pytest.approx(float(eta_moment(1, k)), rel=1e-12)


@pytest.mark.parametrize("k", [1, 2, 7, 30])
def test_log_c0(k):
    assert log_c0(k) == pytest.approx(LogValue.from_rational(leading_coefficient(k)).logmag, rel=1e-12)


def test_log_c0_asymptotic():
    ks = [5, 10, 20, 40, 80]
    errors = [abs(log_c0_asymptotic(k) - log_c0(k)) for k in ks]
    for k, error in zip(ks, errors):
        assert error < 1 / k ** 2
    assert errors == sorted(errors, reverse=True)

    offset = log_c0_asymptotic(40, as_printed=True) - log_c0_asymptotic(40)
    assert offset == pytest.approx(-math.log(2) / 12, abs=1e-9)


def test_log_Pk_at():
    assert log_Pk_at(2, 0.0) == 0
    # P_2(1) = binomial(4, 2)
    assert log_Pk_at(2, 1.0) == pytest.approx(math.log(6))
    with pytest.raises(ValueError):
        log_Pk_at(2, -1.0)


@pytest.mark.parametrize("k", [2, 3, 7, 12])
def test_solve_saddle(k):
    for r in range(1, k * k):
        saddle = solve_saddle(k, r)
        assert saddle.u > 0
        assert h(k, saddle.u) == pytest.approx(k * k - r, rel=1e-9, abs=1e-9)
        assert saddle.U == pytest.approx(saddle.u * h_prime(k, saddle.u))
        assert saddle.f_at_u == pytest.approx(
            log_Pk_at(k, saddle.u) - (k * k - r) * math.log(saddle.u)
        )


def test_saddle_moves_down_with_r():
    us = [solve_saddle(10, r).u for r in range(1, 100)]
    assert all(a > b for a, b in zip(us, us[1:]))


def test_saddle_at_extreme_k():
    saddle = solve_saddle(150, 1)
    assert h_complement(150, saddle.u) == pytest.approx(1, rel=1e-9)
    saddle = solve_saddle(150, 150 ** 2 - 1)
    assert h(150, saddle.u) == pytest.approx(1, rel=1e-9)


def test_pilots_in_the_tails():
    k = 50
    n = k * k
    for r in range(1, n // 10 + 1):
        saddle = solve_saddle(k, r)
        u_pilot, U_pilot = tail_pilot(k, r)
        assert 0.5 < saddle.u / u_pilot <= 1 + 1e-9
        assert 0.5 < saddle.U / U_pilot <= 1 + 1e-9

    for s in range(1, n // 10 + 1):
        saddle = solve_saddle(k, n - s)
        u_pilot, U_pilot = tail_pilot(k, n - s)
        assert 1 - 1e-9 <= saddle.u / u_pilot < 2
        assert 0.5 < saddle.U / U_pilot <= 1 + 1e-9


def test_pilot_relative_error():
    k = 50
    n = k * k
    for m in range(1, 23):
        bound = 10 * m / n * math.log(k)
        for r in (m, n - m):
            saddle = solve_saddle(k, r)
            u_pilot, U_pilot = tail_pilot(k, r)
            assert abs(u_pilot / saddle.u - 1) <= bound, r
            assert abs(U_pilot / saddle.U - 1) <= bound, r


def test_a_const_expansion():
    assert a_const(1000) == pytest.approx(math.log(4) - 1 / 2000, abs=5e-7)
