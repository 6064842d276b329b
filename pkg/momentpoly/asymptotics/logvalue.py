from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

Number = Union[int, float, Fraction]


@dataclass(frozen=True)
class LogValue:
    """A real number stored as sign and natural log of its magnitude.

    Coefficients of P_k leave the double range long before k gets interesting,
    so every estimate is carried in this form. For zero, logmag is -inf.
    """

    sign: int
    logmag: float = -math.inf

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"Sign must be -1, 0 or 1, got {self.sign}")

    @classmethod
    def from_log(cls, logmag: float, sign: int = 1) -> LogValue:
        return cls(sign, float(logmag)) if sign else ZERO

    @classmethod
    def from_rational(cls, value: Union[int, Fraction]) -> LogValue:
        """Exact rational to log domain; math.log takes arbitrarily large ints."""
        value = Fraction(value)
        if value == 0:
            return ZERO

        sign = 1 if value > 0 else -1
        return cls(sign, math.log(abs(value.numerator)) - math.log(value.denominator))

    @classmethod
    def from_float(cls, value: float) -> LogValue:
        if value == 0:
            return ZERO
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    def is_zero(self) -> bool:
        return self.sign == 0

    def _coerce(self, other) -> LogValue:
        if isinstance(other, LogValue):
            return other
        if isinstance(other, Fraction) or isinstance(other, int):
            return LogValue.from_rational(other)
        if isinstance(other, float):
            return LogValue.from_float(other)
        return NotImplemented

    def __mul__(self, other) -> LogValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        return LogValue(self.sign * other.sign, self.logmag + other.logmag)

    __rmul__ = __mul__

    def __truediv__(self, other) -> LogValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("LogValue division by zero")
        if self.is_zero():
            return ZERO
        return LogValue(self.sign * other.sign, self.logmag - other.logmag)

    def __neg__(self) -> LogValue:
        return LogValue(-self.sign, self.logmag)

    def __abs__(self) -> LogValue:
        return LogValue(abs(self.sign), self.logmag)

    def __pow__(self, exponent: float) -> LogValue:
        if self.is_zero():
            if exponent <= 0:
                raise ZeroDivisionError("Zero to a non-positive power")
            return ZERO
        if self.sign < 0 and not float(exponent).is_integer():
            raise ValueError("Fractional power of a negative LogValue")

        sign = -1 if self.sign < 0 and int(exponent) % 2 else 1
        return LogValue(sign, self.logmag * exponent)

    def __add__(self, other) -> LogValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self

        if self.sign == other.sign:
            return LogValue(self.sign, float(np.logaddexp(self.logmag, other.logmag)))

        big, small = (self, other) if self.logmag >= other.logmag else (other, self)
        if big.logmag == small.logmag:
            return ZERO
        return LogValue(big.sign, big.logmag + math.log1p(-math.exp(small.logmag - big.logmag)))

    __radd__ = __add__

    def __sub__(self, other) -> LogValue:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __float__(self) -> float:
        if self.is_zero():
            return 0.0
        try:
            return self.sign * math.exp(self.logmag)
        except OverflowError:
            return self.sign * math.inf

    def ratio_to(self, other: LogValue) -> float:
        """self / other as a float, computed as exp(log self - log other)."""
        return float(self / other)

    def log10(self) -> float:
        return self.logmag / math.log(10)

    def scientific(self, digits: int = 6) -> str:
        """Decimal scientific notation that works far outside the double range."""
        if self.is_zero():
            return "0"

        exponent = math.floor(self.log10())
        mantissa = 10 ** (self.log10() - exponent)
        text = f"{mantissa:.{digits - 1}f}"
        if text.startswith("10"):
            exponent += 1
            text = f"{mantissa / 10:.{digits - 1}f}"

        sign = "-" if self.sign < 0 else ""
        return f"{sign}{text}e{exponent:+03d}"


ZERO = LogValue(0)
ONE = LogValue(1, 0.0)


def ratio(exact: LogValue, estimate: LogValue) -> float:
    """exact / estimate."""
    return exact.ratio_to(estimate)
