import math
from fractions import Fraction

import pytest

from momentpoly.asymptotics import LogValue
from momentpoly.asymptotics.logvalue import ONE, ZERO, ratio


def test_from_rational():
    value = LogValue.from_rational(Fraction(-3, 4))
    assert value.sign == -1
    assert value.logmag == pytest.approx(math.log(0.75))
    assert LogValue.from_rational(0) is ZERO


def test_huge_integers():
    value = LogValue.from_rational(10 ** 5000)
    assert value.logmag == pytest.approx(5000 * math.log(10))
    assert float(value) == math.inf
    assert float(LogValue.from_rational(Fraction(1, 10 ** 5000))) == 0.0


def test_arithmetic():
    two = LogValue.from_float(2.0)
    three = LogValue.from_rational(3)
    assert float(two * three) == pytest.approx(6)
    assert float(three / two) == pytest.approx(1.5)
    assert float(two + three) == pytest.approx(5)
    assert float(two - three) == pytest.approx(-1)
    assert float(-two) == pytest.approx(-2)
    assert float(abs(-two)) == pytest.approx(2)
    assert float(two ** 3) == pytest.approx(8)
    assert float((-two) ** 3) == pytest.approx(-8)
    assert float(two * 0.5) == pytest.approx(1)
    assert float(Fraction(1, 3) * three) == pytest.approx(1)


def test_zero():
    assert (ZERO * ONE).is_zero()
    assert (ONE - ONE).is_zero()
    assert ZERO + ONE == ONE
    assert float(ZERO) == 0.0
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO ** -1


def test_invalid():
    with pytest.raises(ValueError):
        LogValue(2, 0.0)
    with pytest.raises(ValueError):
        LogValue.from_float(-2.0) ** 0.5


def test_cancellation_keeps_precision():
    big = LogValue.from_log(10.0)
    almost = big * LogValue.from_float(1 - 1e-6)
    difference = big - almost
    assert difference.logmag == pytest.approx(10 + math.log(1e-6), rel=1e-6)


def test_ratio():
    a = LogValue.from_log(10000.0)
    b = LogValue.from_log(10000.0 - math.log(2))
    assert a.ratio_to(b) == pytest.approx(2)
    assert ratio(a, b) == pytest.approx(2)


@pytest.mark.parametrize(
    "value, text",
    [
        (57428, "5.74280e+04"),
        (Fraction(1, 12), "8.33333e-02"),
        (-343, "-3.43000e+02"),
        (10 ** 500, "1.00000e+500"),
        (999999999, "1.00000e+09"),
    ],
)
def test_scientific(value, text):
    assert LogValue.from_rational(value).scientific() == text
    assert ZERO.scientific() == "0"
