from __future__ import annotations

import logging
import time
from math import comb
from typing import List, Sequence

from gmpy2 import mpz

from .tools import leading_coefficient
from .types import ExactCoefficientTable, MomentMultiset


def _pack(coefficients: Sequence[int], slot: int) -> int:
    return int.from_bytes(
        b"".join(c.to_bytes(slot, "little") for c in coefficients), "little"
    )


def _unpack(value: int, slot: int, count: int) -> List[int]:
    data = value.to_bytes(slot * count, "little")
    return [
        int.from_bytes(data[i * slot : (i + 1) * slot], "little") for i in range(count)
    ]


def mul_kronecker(p: Sequence[int], q: Sequence[int]) -> List[int]:
    """Product of two polynomials with non-negative integer coefficients.

    Both are packed into one integer with a byte-aligned slot per coefficient
    wide enough that no product coefficient overflows into its neighbour, then
    multiplied once by GMP.
    """
    bound = max(p) * max(q) * min(len(p), len(q))
    slot = max(1, (bound.bit_length() + 7) // 8)

    product = mpz(_pack(p, slot)) * mpz(_pack(q, slot))
    return _unpack(int(product), slot, len(p) + len(q) - 1)


def binomial_power(j: int, m: int) -> List[int]:
    """Coefficients of (1 + j x)^m, lowest degree first."""
    return [comb(m, i) * j ** i for i in range(m + 1)]


def poly_from_factors(factors: Sequence[Sequence[int]]) -> List[int]:
    """Balanced product tree over a list of coefficient lists."""
    if len(factors) == 1:
        return list(factors[0])

    d = len(factors) >> 1
    return mul_kronecker(poly_from_factors(factors[:d]), poly_from_factors(factors[d:]))


def expand_product(k: int) -> ExactCoefficientTable:
    """b_r(k) by multiplying out prod_j (1 + j x)^mult(j).

    The coefficient of x^r is the r-th elementary symmetric polynomial of the
    moment multiset, i.e. b_r.
    """
    multiset = MomentMultiset(k)
    start = time.perf_counter()
    logging.info("Expanding product", extra={"k": k, "method": "product"})

    factors = [binomial_power(j, m) for j, m in multiset.items()]
    b = poly_from_factors(factors)

    logging.info(
        "Expanded product",
        extra={"k": k, "method": "product", "seconds": time.perf_counter() - start},
    )
    return ExactCoefficientTable(k=k, b=tuple(b), c0=leading_coefficient(k))
