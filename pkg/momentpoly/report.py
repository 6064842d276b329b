"""Rows for the command line tables.

Everything here is lookup and formatting: exact values come from
``momentpoly.exact`` and every ratio from ``momentpoly.asymptotics``.
"""
from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Dict, IO, Iterable, List, Optional, Sequence, Union

from .asymptotics import (
    Estimator,
    LogValue,
    delta_sign_estimate,
    estimate,
    gamma3_closed,
    h_prime_at_one,
    tail_pilot,
    log_exact_coefficient,
    mu_location,
    predicted_max_interval,
    solve_saddle,
)
from .errors import CorrectionDiverged, EndpointExcluded
from .exact import (
    ExactCoefficientTable,
    TableCache,
    TableMethod,
    argmax_exact,
    coefficient_table,
    int_to_decimal,
    unimodality_peak,
)

EXCLUDED = "excluded"
DIVERGED = "diverged"

TABLE1_ESTIMATORS = [
    Estimator.TAIL_LOW,
    Estimator.PRECISE,
    Estimator.SADDLE,
    Estimator.UNIFORM,
    Estimator.TAIL_HIGH,
]
FIGURE1_ESTIMATORS = [Estimator.UNIFORM, Estimator.SADDLE, Estimator.PRECISE]

# The precise expansion is printed with ten significant figures, all else six.
RATIO_FORMATS = {Estimator.PRECISE.value: "{:.10g}"}
DEFAULT_RATIO_FORMAT = "{:.6g}"
RATIO_COLUMNS = {estimator.value for estimator in Estimator}

Cell = Union[float, str]


@dataclass
class ComparisonRow:
    """Exact c_r(k) against a set of estimators; a ratio is exact/estimate, or
    a marker where the estimator is undefined."""

    k: int
    r: int
    exact: LogValue
    b: int
    ratios: Dict[str, Cell] = field(default_factory=dict)

    def record(self, sci: bool = True) -> Dict[str, Any]:
        record = {
            "r": self.r,
            "b_r": format_bigint_sci(self.b) if sci else int_to_decimal(self.b),
        }
        record.update(self.ratios)
        return record


def format_bigint_sci(value: int, digits: int = 6) -> str:
    """Integers with at most ``digits`` digits in full, larger ones as a
    mantissa of ``digits`` significant figures, trailing zeros kept."""
    text = int_to_decimal(abs(value))
    sign = "-" if value < 0 else ""
    if len(text) <= digits:
        return sign + text

    exponent = len(text) - 1
    head = int(text[:digits])
    if text[digits] >= "5":
        head += 1
    if head == 10 ** digits:
        head //= 10
        exponent += 1

    mantissa = str(head)
    return f"{sign}{mantissa[0]}.{mantissa[1:]}e+{exponent:02d}"


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return int_to_decimal(value.numerator)
    return f"{int_to_decimal(value.numerator)}/{int_to_decimal(value.denominator)}"


def format_cell(column: str, value: Any) -> str:
    if isinstance(value, float):
        if column not in RATIO_COLUMNS or math.isinf(value) or math.isnan(value):
            return repr(value)
        return RATIO_FORMATS.get(column, DEFAULT_RATIO_FORMAT).format(value)
    if isinstance(value, bool):
        return "pass" if value else "fail"
    return str(value)


def _estimates(
    task: Sequence[int], estimators: Sequence[Estimator], J: int, M: int
) -> Dict[str, Union[LogValue, str]]:
    """Every requested estimate for one (k, r). Runs in worker processes."""
    k, r = task
    values: Dict[str, Union[LogValue, str]] = {}
    for estimator in estimators:
        try:
            values[estimator.value] = estimate(estimator, k, r, J=J, M=M)
        except EndpointExcluded:
            values[estimator.value] = EXCLUDED
        except CorrectionDiverged:
            values[estimator.value] = DIVERGED
    return values


def _sweep(function: Callable, tasks: Sequence[Any], jobs: int) -> List[Any]:
    """map ``function`` over ``tasks``, in worker processes when jobs > 1.
    Results come back in task order."""
    if jobs <= 1 or len(tasks) < 2:
        return [function(task) for task in tasks]

    chunksize = max(1, len(tasks) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, tasks, chunksize=chunksize))


def comparison_rows(
    table: ExactCoefficientTable,
    rs: Iterable[int],
    estimators: Sequence[Estimator],
    J: int = 4,
    M: int = 7,
    jobs: int = 1,
) -> List[ComparisonRow]:
    k = table.k
    rs = list(rs)
    logging.info(
        "Comparing estimators",
        extra={"k": k, "rows": len(rs), "estimators": [e.value for e in estimators]},
    )

    results = _sweep(
        partial(_estimates, estimators=tuple(estimators), J=J, M=M),
        [(k, r) for r in rs],
        jobs,
    )

    rows = []
    for r, values in zip(rs, results):
        exact = log_exact_coefficient(table, r)
        ratios: Dict[str, Cell] = {}
        for name, value in values.items():
            ratios[name] = value if isinstance(value, str) else exact.ratio_to(value)
        rows.append(ComparisonRow(k=k, r=r, exact=exact, b=table.b[r], ratios=ratios))
    return rows


def table1_rows(
    table: ExactCoefficientTable, rs: Optional[Iterable[int]] = None, jobs: int = 1
) -> List[Dict[str, Any]]:
    """r, b_r and the five ratio columns of the comparison at fixed k."""
    if rs is None:
        rs = range(1, table.degree + 1)
    rows = comparison_rows(table, rs, TABLE1_ESTIMATORS, J=4, jobs=jobs)
    return [row.record() for row in rows]


def figure1_rows(
    table: ExactCoefficientTable,
    stride: int,
    estimators: Sequence[Estimator] = FIGURE1_ESTIMATORS,
    J: int = 4,
    M: int = 7,
    jobs: int = 1,
) -> List[Dict[str, Any]]:
    """Ratios at r = stride, 2 stride, ... below k^2."""
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")

    rows = comparison_rows(table, range(stride, table.degree, stride), estimators, J, M, jobs)
    return [
        {"r": row.r, "log_c_r": row.exact.logmag, **row.ratios} for row in rows
    ]


def coefficient_rows(
    table: ExactCoefficientTable, rs: Iterable[int], sci: bool = False
) -> List[Dict[str, Any]]:
    """Exact b_r and c_r; c_r as a reduced fraction, or scientific with ``sci``."""
    rows = []
    for r in rs:
        c = table.coefficient(r)
        rows.append(
            {
                "r": r,
                "b_r": format_bigint_sci(table.b[r]) if sci else int_to_decimal(table.b[r]),
                "c_r": LogValue.from_rational(c).scientific() if sci else format_rational(c),
            }
        )
    return rows


def _maximum_record(
    k: int, cache: Optional[TableCache], method: TableMethod, rho: float
) -> Dict[str, Any]:
    table = coefficient_table(k, cache, method)
    argmax = argmax_exact(k)
    is_unimodal, peak = unimodality_peak(k)
    mu, mu_float = mu_location(k)
    lo, hi = predicted_max_interval(k, rho)
    _, slope = h_prime_at_one(k)

    r = argmax[-1]
    logging.info("Located maximal coefficient", extra={"k": k, "argmax": argmax})
    return {
        "k": k,
        "argmax": r,
        "ties": ";".join(str(i) for i in argmax),
        "centre": table.degree - mu_float,
        "difference": float(r - table.degree + mu),
        "mu": format_rational(mu),
        "lo": lo,
        "hi": hi,
        "in_interval": lo <= r <= hi,
        "unimodal": is_unimodal,
        "peak": peak,
        "h_prime_at_one": slope,
    }


def maximum_rows(
    ks: Iterable[int],
    rho: float = 1.0,
    cache: Optional[TableCache] = None,
    method: TableMethod = TableMethod.PRODUCT,
    jobs: int = 1,
) -> List[Dict[str, Any]]:
    return _sweep(partial(_maximum_record, cache=cache, method=method, rho=rho), list(ks), jobs)


TABLE2_COLUMNS = ["k", "argmax", "centre", "difference", "in_interval"]
TABLE2_FORMATS = {"centre": "{:.8g}", "difference": "{:.8g}"}


def table2_rows(
    ks: Iterable[int],
    rho: float = 1.0,
    cache: Optional[TableCache] = None,
    method: TableMethod = TableMethod.PRODUCT,
    jobs: int = 1,
) -> List[Dict[str, Any]]:
    """k, argmax r, k^2 - mu, r - k^2 + mu and whether r lies in the predicted
    interval."""
    rows = maximum_rows(ks, rho, cache, method, jobs)
    return [
        {
            column: (
                TABLE2_FORMATS[column].format(row[column])
                if column in TABLE2_FORMATS
                else row[column]
            )
            for column in TABLE2_COLUMNS
        }
        for row in rows
    ]


def _saddle_record(task: Sequence[int]) -> Dict[str, Any]:
    k, r = task
    saddle = solve_saddle(k, r)
    u_pilot, U_pilot = tail_pilot(k, r)
    return {
        "r": r,
        "u": saddle.u,
        "U": saddle.U,
        "f_at_u": saddle.f_at_u,
        "u_pilot": u_pilot,
        "U_pilot": U_pilot,
        "delta_sign": delta_sign_estimate(k, r),
        "gamma3_imag": gamma3_closed(k, saddle.u).imag,
    }


def saddle_rows(k: int, rs: Iterable[int], jobs: int = 1) -> List[Dict[str, Any]]:
    rs = [r for r in rs if 0 < r < k * k]
    return _sweep(_saddle_record, [(k, r) for r in rs], jobs)


def write_csv(rows: Sequence[Dict[str, Any]], out: IO[str]):
    if not rows:
        return

    writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({column: format_cell(column, value) for column, value in row.items()})


def write_json(rows: Sequence[Dict[str, Any]], out: IO[str]):
    json.dump(list(rows), out, indent=2)
    out.write("\n")


WRITERS = {"csv": write_csv, "json": write_json}
