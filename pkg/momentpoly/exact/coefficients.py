from __future__ import annotations

import logging
import threading
import time
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from ..errors import IntegralityViolation
from ..poly import RationalPolynomial
from .cache import TableCache
from .product import expand_product
from .tools import leading_coefficient, power_sum_closed, power_sum_polynomial
from .types import ExactCoefficientTable, TableMethod


def newton_coefficients(k: int) -> ExactCoefficientTable:
    """b_r(k) from Newton's identities r b_r = sum_{n=1}^{r} (-1)^(n-1) p_n b_(r-n)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")

    degree = k * k
    start = time.perf_counter()
    logging.info("Running Newton recursion", extra={"k": k, "method": "newton"})

    p = [0] + [power_sum_closed(n, k) for n in range(1, degree + 1)]
    b = [1]
    for r in range(1, degree + 1):
        total = 0
        for n in range(1, r + 1):
            term = p[n] * b[r - n]
            total += term if n % 2 else -term

        value = Fraction(total, r)
        if value.denominator != 1:
            raise IntegralityViolation(k, r, value)
        b.append(value.numerator)

    logging.info(
        "Finished Newton recursion",
        extra={"k": k, "method": "newton", "seconds": time.perf_counter() - start},
    )
    return ExactCoefficientTable(k=k, b=tuple(b), c0=leading_coefficient(k))


_BUILDERS = {
    TableMethod.NEWTON: newton_coefficients,
    TableMethod.PRODUCT: expand_product,
}

_tables: Dict[int, ExactCoefficientTable] = {}
_build_locks: Dict[int, threading.Lock] = {}
_tables_lock = threading.Lock()


def _lookup(k: int) -> Optional[ExactCoefficientTable]:
    with _tables_lock:
        return _tables.get(k)


def _build_lock(k: int) -> threading.Lock:
    with _tables_lock:
        return _build_locks.setdefault(k, threading.Lock())


def coefficient_table(
    k: int,
    cache: Optional[TableCache] = None,
    method: TableMethod = TableMethod.PRODUCT,
) -> ExactCoefficientTable:
    """Table for k from memory, then from the disk cache, else built and stored.

    A build holds the lock of its own k only.
    """
    table = _lookup(k)
    if table is not None:
        return table

    with _build_lock(k):
        table = _lookup(k)
        if table is not None:
            return table

        if cache is not None:
            table = cache.load(k)

        if table is None:
            table = _BUILDERS[method](k)
            if cache is not None:
                cache.store(table)

        with _tables_lock:
            _tables[k] = table
        return table


def clear_tables():
    with _tables_lock:
        _tables.clear()


def coefficient(k: int, r: int, cache: Optional[TableCache] = None) -> Fraction:
    """c_r(k) as an exact rational."""
    return coefficient_table(k, cache).coefficient(r)


def evaluate(k: int, n: Union[int, Fraction], cache: Optional[TableCache] = None) -> Fraction:
    """P_k(N) by Horner's rule over the exact coefficients."""
    table = coefficient_table(k, cache)
    n = Fraction(n)

    total = Fraction(0)
    for b in table.b:
        total = total * n + b
    return table.c0 * total


def argmax_exact(k: int, cache: Optional[TableCache] = None) -> List[int]:
    """Every r at which b_r (hence c_r) is maximal, ascending."""
    b = coefficient_table(k, cache).b
    peak = max(b)
    return [r for r, value in enumerate(b) if value == peak]


def unimodality_peak(k: int, cache: Optional[TableCache] = None) -> Tuple[bool, int]:
    """Scan for a non-decreasing run followed by a non-increasing run.

    Returns (is_unimodal, peak) where peak is the last index of the rise, so on
    a plateau at the top the largest index of the plateau is reported.
    """
    b = coefficient_table(k, cache).b

    peak = 0
    while peak + 1 < len(b) and b[peak + 1] >= b[peak]:
        peak += 1

    is_unimodal = all(b[r + 1] <= b[r] for r in range(peak, len(b) - 1))
    return is_unimodal, peak


@lru_cache(maxsize=None)
def moment_b_polynomial(r: int) -> RationalPolynomial:
    """b_r(k) as a polynomial in k, from Newton's identities over the power sum
    polynomials."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r == 0:
        return RationalPolynomial.constant(1, "k")

    total = RationalPolynomial((), "k")
    for n in range(1, r + 1):
        term = power_sum_polynomial(n) * moment_b_polynomial(r - n)
        total = total + term if n % 2 else total - term
    return total / r
