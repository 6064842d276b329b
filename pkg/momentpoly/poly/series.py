from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, List, Sequence

from .polynomial import RationalPolynomial


class RationalSeries:
    """Power series truncated at a fixed order, with exact coefficients.

    Coefficients are Fractions or RationalPolynomials (any ring element that
    supports +, -, * and division by an integer). Every result is truncated
    at the smaller order of the operands; coefficients above the order are
    unknown, not zero.
    """

    __slots__ = ("_coefficients", "order")

    def __init__(self, coefficients: Iterable[Any], order: int):
        if order < 0:
            raise ValueError(f"Negative truncation order {order}")

        coefficients = list(coefficients)[: order + 1]
        if not coefficients:
            coefficients = [Fraction(0)]
        zero = coefficients[0] * 0
        coefficients.extend([zero] * (order + 1 - len(coefficients)))

        self._coefficients = tuple(
            Fraction(c) if isinstance(c, int) else c for c in coefficients
        )
        self.order = order

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    def __getitem__(self, power: int):
        return self._coefficients[power]

    def __len__(self) -> int:
        return self.order + 1

    def _zero(self):
        return self._coefficients[0] * 0

    def _one(self):
        return self._zero() + 1

    def _like(self, coefficients: Sequence[Any], order: int = None) -> RationalSeries:
        return RationalSeries(coefficients, self.order if order is None else order)

    def _is_scalar(self, other) -> bool:
        return isinstance(other, (int, Fraction, RationalPolynomial))

    def __add__(self, other) -> RationalSeries:
        if self._is_scalar(other):
            return self._like([self[0] + other] + list(self._coefficients[1:]))
        order = min(self.order, other.order)
        return self._like([self[i] + other[i] for i in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self) -> RationalSeries:
        return self._like([-c for c in self._coefficients])

    def __sub__(self, other) -> RationalSeries:
        return self + (-other)

    def __rsub__(self, other) -> RationalSeries:
        return (-self) + other

    def __mul__(self, other) -> RationalSeries:
        if self._is_scalar(other):
            return self._like([c * other for c in self._coefficients])

        order = min(self.order, other.order)
        product = [self._zero() for _ in range(order + 1)]
        for i in range(order + 1):
            a = self[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                product[i + j] = product[i + j] + a * other[j]
        return self._like(product, order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalSeries:
        if isinstance(other, (int, Fraction)):
            return self._like([c / other for c in self._coefficients])
        return self * other.reciprocal()

    def reciprocal(self) -> RationalSeries:
        """1/f, requires an invertible scalar constant term."""
        head = self[0]
        if isinstance(head, RationalPolynomial):
            if head.degree != 0:
                raise ValueError("Constant term must be a non-zero constant")
            head = head.coefficient(0)
        if head == 0:
            raise ZeroDivisionError("Series with zero constant term has no reciprocal")

        inverse = [self._one() / head]
        for n in range(1, self.order + 1):
            total = self._zero()
            for i in range(1, n + 1):
                total = total + self[i] * inverse[n - i]
            inverse.append(-total / head)
        return self._like(inverse)

    def log(self) -> RationalSeries:
        """Formal logarithm of a series with constant term 1."""
        if self[0] != 1:
            raise ValueError(f"log needs constant term 1, got {self[0]}")

        result: List[Any] = [self._zero()]
        for n in range(1, self.order + 1):
            total = self[n] * n
            for i in range(1, n):
                total = total - result[i] * i * self[n - i]
            result.append(total / n)
        return self._like(result)

    def exp(self) -> RationalSeries:
        """Formal exponential of a series with constant term 0."""
        if self[0] != 0:
            raise ValueError(f"exp needs constant term 0, got {self[0]}")

        result: List[Any] = [self._one()]
        for n in range(1, self.order + 1):
            total = self._zero()
            for i in range(1, n + 1):
                total = total + self[i] * i * result[n - i]
            result.append(total / n)
        return self._like(result)

    def __pow__(self, exponent: int) -> RationalSeries:
        if exponent < 0:
            return self.reciprocal() ** (-exponent)

        result = self._like([self._one()])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def compose(self, inner: RationalSeries) -> RationalSeries:
        """self(inner(x)), requires inner to have zero constant term."""
        if inner[0] != 0:
            raise ValueError("Inner series of a composition must vanish at 0")

        order = min(self.order, inner.order)
        result = RationalSeries([self._zero()], order)
        for c in reversed(self._coefficients[: order + 1]):
            result = result * inner + c
        return result

    def reversion(self) -> RationalSeries:
        """Compositional inverse g with self(g(x)) = x, by Lagrange inversion:
        [x^m] g = (1/m) [w^(m-1)] (w / self(w))^m."""
        if self[0] != 0:
            raise ValueError("Reversion needs zero constant term")
        if self[1] == 0:
            raise ZeroDivisionError("Reversion needs a non-zero linear term")

        quotient = RationalSeries(self._coefficients[1:], self.order - 1)
        inverse = quotient.reciprocal()
        power = RationalSeries([self._one()], self.order - 1)
        result = [self._zero()]
        for m in range(1, self.order + 1):
            power = power * inverse
            result.append(power[m - 1] / m)
        return self._like(result)

    def shift_down(self, count: int = 1) -> RationalSeries:
        """Divide by x^count, dropping the (vanishing) low coefficients."""
        for i in range(count):
            if self[i] != 0:
                raise ValueError(f"Coefficient of x^{i} is not zero")
        return self._like(self._coefficients[count:], self.order - count)

    def __call__(self, x):
        """Evaluate the truncated sum at x."""
        result = 0
        for c in reversed(self._coefficients):
            result = result * x + c
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.order == other.order and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self.order, self._coefficients))

    def to_polynomial(self, variable: str = "x") -> RationalPolynomial:
        """Truncated sum as a polynomial; only for Fraction coefficients."""
        return RationalPolynomial(self._coefficients, variable)

    def __repr__(self) -> str:
        return f"RationalSeries({list(self._coefficients)!r}, order={self.order})"
