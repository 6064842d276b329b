from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Tuple

import numpy as np

from ..errors import IndexOutOfRange

BigRational = Fraction


@dataclass(frozen=True)
class MomentMultiset:
    """The k^2 negated roots of P_k: j appears j times for j <= k and
    2k - j times for k < j <= 2k."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")

    def multiplicity(self, j: int) -> int:
        if 1 <= j <= self.k:
            return j
        if self.k < j <= 2 * self.k:
            return 2 * self.k - j
        return 0

    def items(self) -> Iterator[Tuple[int, int]]:
        """(element, multiplicity) pairs with non-zero multiplicity, ascending."""
        for j in range(1, 2 * self.k):
            yield j, self.multiplicity(j)

    @property
    def total(self) -> int:
        return self.k * self.k

    @property
    def largest(self) -> int:
        return 2 * self.k - 1

    def elements(self) -> List[int]:
        """Every element repeated by its multiplicity."""
        return [j for j, m in self.items() for _ in range(m)]

    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """Elements and multiplicities as float arrays, for vectorised sums."""
        js = np.arange(1, 2 * self.k, dtype=np.float64)
        mults = np.minimum(js, 2 * self.k - js)
        return js, mults


class TableMethod(Enum):
    NEWTON = "newton"
    PRODUCT = "product"

    @staticmethod
    def from_str(value: str) -> TableMethod:
        for method in TableMethod:
            if method.value == value:
                return method

        raise ValueError(f"Unknown table method: {value}")


@dataclass(frozen=True)
class ExactCoefficientTable:
    """All b_r(k) = c_r(k)/c_0(k) for r = 0..k^2 plus the leading coefficient."""

    k: int
    b: Tuple[int, ...]
    c0: Fraction

    def __post_init__(self):
        if len(self.b) != self.k * self.k + 1:
            raise ValueError(
                f"Table for k={self.k} needs {self.k * self.k + 1} entries, got {len(self.b)}"
            )
        if self.b[0] != 1:
            raise ValueError(f"b_0 must be 1, got {self.b[0]}")

    @property
    def degree(self) -> int:
        return self.k * self.k

    def __len__(self) -> int:
        return len(self.b)

    def _check(self, r: int):
        if not 0 <= r <= self.degree:
            raise IndexOutOfRange(self.k, r)

    def ratio(self, r: int) -> int:
        """b_r."""
        self._check(r)
        return self.b[r]

    def coefficient(self, r: int) -> Fraction:
        """c_r = c_0 b_r."""
        self._check(r)
        return self.c0 * self.b[r]
