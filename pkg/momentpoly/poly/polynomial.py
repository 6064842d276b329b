from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Tuple, Union

Scalar = Union[int, Fraction]


class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored lowest degree first and the highest stored
    coefficient is never zero, so the zero polynomial has no coefficients.
    The variable name only affects printing.
    """

    __slots__ = ("_coefficients", "variable")

    def __init__(self, coefficients: Iterable[Scalar] = (), variable: str = "r"):
        coefficients = [Fraction(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()

        self._coefficients: Tuple[Fraction, ...] = tuple(coefficients)
        self.variable = variable

    @classmethod
    def constant(cls, value: Scalar, variable: str = "r") -> RationalPolynomial:
        return cls([value], variable)

    @classmethod
    def identity(cls, variable: str = "r") -> RationalPolynomial:
        return cls([0, 1], variable)

    @classmethod
    def monomial(
        cls, degree: int, coefficient: Scalar = 1, variable: str = "r"
    ) -> RationalPolynomial:
        if degree < 0:
            raise ValueError(f"Negative degree {degree}")
        return cls([0] * degree + [coefficient], variable)

    @classmethod
    def falling_factorial(
        cls, count: int, shift: Scalar = 0, variable: str = "r"
    ) -> RationalPolynomial:
        """(x - shift)(x - shift - 1)...(x - shift - count + 1); 1 when count is 0."""
        result = cls.constant(1, variable)
        for i in range(count):
            result = result * cls([-(shift + i), 1], variable)
        return result

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coefficients:
            return Fraction(0)
        return self._coefficients[-1]

    def is_zero(self) -> bool:
        return not self._coefficients

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coefficients):
            return self._coefficients[power]
        return Fraction(0)

    def _coerce(self, other) -> RationalPolynomial:
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([other], self.variable)
        return NotImplemented

    def __add__(self, other) -> RationalPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other

        size = max(len(self._coefficients), len(other._coefficients))
        return RationalPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)],
            self.variable,
        )

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial([-c for c in self._coefficients], self.variable)

    def __sub__(self, other) -> RationalPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RationalPolynomial:
        return (-self) + other

    def __mul__(self, other) -> RationalPolynomial:
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(
                [c * other for c in self._coefficients], self.variable
            )

        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RationalPolynomial((), self.variable)

        product = [Fraction(0)] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other._coefficients):
                product[i + j] += a * b

        return RationalPolynomial(product, self.variable)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> RationalPolynomial:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("Polynomial division by zero")
        return RationalPolynomial(
            [c / other for c in self._coefficients], self.variable
        )

    def __pow__(self, exponent: int) -> RationalPolynomial:
        if exponent < 0:
            raise ValueError("Polynomials only support non-negative powers")

        result = RationalPolynomial.constant(1, self.variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, divisor: RationalPolynomial) -> Tuple[RationalPolynomial, RationalPolynomial]:
        """Euclidean division, returns (quotient, remainder)."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")

        remainder = list(self._coefficients)
        shift = len(remainder) - len(divisor._coefficients)
        if shift < 0:
            return RationalPolynomial((), self.variable), self

        quotient = [Fraction(0)] * (shift + 1)
        lead = divisor.leading_coefficient
        for i in range(shift, -1, -1):
            factor = remainder[i + divisor.degree] / lead
            quotient[i] = factor
            if factor == 0:
                continue
            for j, d in enumerate(divisor._coefficients):
                remainder[i + j] -= factor * d

        return (
            RationalPolynomial(quotient, self.variable),
            RationalPolynomial(remainder[: divisor.degree], self.variable),
        )

    def __call__(self, x):
        """Horner evaluation. Works for ints, Fractions, floats, complex numbers
        and other polynomials (composition)."""
        if isinstance(x, RationalPolynomial):
            result = RationalPolynomial((), x.variable)
        else:
            result = 0
        for c in reversed(self._coefficients):
            result = result * x + c
        return result

    def compose(self, inner: RationalPolynomial) -> RationalPolynomial:
        return self(inner)

    def shift(self, offset: Scalar) -> RationalPolynomial:
        """p(x + offset)."""
        return self(RationalPolynomial([offset, 1], self.variable))

    def scale(self, factor: Scalar) -> RationalPolynomial:
        """p(factor * x)."""
        result = []
        power = Fraction(1)
        for c in self._coefficients:
            result.append(c * power)
            power *= factor
        return RationalPolynomial(result, self.variable)

    def derivative(self) -> RationalPolynomial:
        return RationalPolynomial(
            [i * c for i, c in enumerate(self._coefficients)][1:], self.variable
        )

    def rename(self, variable: str) -> RationalPolynomial:
        return RationalPolynomial(self._coefficients, variable)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def to_text(self) -> str:
        """Expanded form, highest power first, e.g. ``-7/12*r^2+7/12*r``."""
        if self.is_zero():
            return "0"

        terms = []
        for power in range(self.degree, -1, -1):
            c = self._coefficients[power]
            if c == 0:
                continue

            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = self.variable if power == 1 else f"{self.variable}^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            terms.append((sign, body))

        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += sign + body
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalPolynomial({self.to_text()!r}, variable={self.variable!r})"
