import argparse
import logging
import platform
import sys
from typing import Any, Dict, List, Optional, Sequence

from pythonjsonlogger import jsonlogger

import momentpoly
from . import report
from .config import FORMATS, SERIES_KINDS, RunConfig, estimator_list, int_range
from .errors import MomentPolyError
from .exact import TableMethod, coefficient_table, moment_b_polynomial
from .series import (
    g_polynomial,
    lagrange_lambda,
    q_polynomial,
    q_tilde_polynomial,
    series_logPk,
    series_u,
    series_U,
)

LOG_KEYS = [
    "levelname",
    "asctime",
    "module",
    "funcName",
    "lineno",
    "message",
]


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1; status 2 is kept for failed computations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def new_parser(name: str) -> ArgumentParser:
    parser = ArgumentParser(f"MomentPoly {name}", allow_abbrev=False)
    parser.add_argument(
        "operation",
        metavar="operation",
        type=str,
        choices=OP_LIST,
        help="Specify operation.",
    )
    return parser


def add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "-o",
        "--out",
        type=str,
        default=None,
        help="Output file. Defaults to standard output.",
    )
    parser.add_argument(
        "--format",
        type=str,
        choices=FORMATS,
        default="csv",
        help="Output format. Defaults to csv.",
    )
    add_logging_arguments(parser)


def add_logging_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--log-file",
        type=str,
        default=None,
        help="Write JSON log records to this file.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_const",
        default=False,
        const=True,
        help="Toggle to log progress to standard error.",
    )


def add_table_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--cache-dir",
        type=str,
        default=None,
        help="Directory of cached coefficient tables. "
        "Defaults to $MOMENTPOLY_CACHE, then ./cache.",
    )
    parser.add_argument(
        "--method",
        type=str,
        choices=[method.value for method in TableMethod],
        default=TableMethod.PRODUCT.value,
        help="How to build missing tables. Defaults to product.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="Worker processes for sweeps. Defaults to 1.",
    )


def setup_logging(log_file: Optional[str], verbose: bool):
    logger = logging.getLogger()
    format_str = " ".join(["%({0:s})s".format(key) for key in LOG_KEYS])

    if log_file is not None:
        handler = logging.FileHandler(log_file, "w", encoding="UTF-8")
        level = logging.INFO
    else:
        handler = logging.StreamHandler(sys.stderr)
        level = logging.INFO if verbose else logging.WARNING
    handler.setFormatter(jsonlogger.JsonFormatter(format_str))

    [logger.removeHandler(h) for h in logger.handlers.copy()]
    logger.addHandler(handler)
    logger.setLevel(level)

    logging.info(
        "Info",
        extra={
            "version": momentpoly.__version__,
            "os": f"{platform.system()} {platform.release()}",
            "python": platform.python_version(),
        },
    )


def build_config(parser: ArgumentParser, command: str, argv: Sequence[str]) -> RunConfig:
    args = parser.parse_args(argv)
    setup_logging(getattr(args, "log_file", None), getattr(args, "verbose", False))
    try:
        return RunConfig.from_args(command, args)
    except ValueError as e:
        parser.error(str(e))


def emit(rows: List[Dict[str, Any]], config: RunConfig):
    writer = report.WRITERS[config.format]
    if config.out is None:
        writer(rows, sys.stdout)
        return

    with open(config.out, "w", encoding="utf-8", newline="") as f:
        writer(rows, f)
    print(f"Wrote {len(rows)} rows to {config.out}", file=sys.stderr)


def emit_text(text: str, config: RunConfig):
    if config.out is None:
        print(text)
        return

    with open(config.out, "w", encoding="utf-8") as f:
        f.write(text + "\n")


def load_table(config: RunConfig, k: int):
    cache = config.cache()
    if not cache.path(k).is_file():
        logging.warning(
            "No cached table, building it",
            extra={"k": k, "method": config.method.value, "cache": str(cache.directory)},
        )
    print(f"Loading coefficient table for k={k}... ", end="", flush=True, file=sys.stderr)
    table = coefficient_table(k, cache, config.method)
    print("DONE", file=sys.stderr)
    return table


def cmd_coeffs(argv: Sequence[str]) -> int:
    """Exact b_r(k) and c_r(k)."""
    parser = new_parser("Coefficients")
    parser.add_argument("--k", type=int, required=True, help="Moment index k.")
    parser.add_argument(
        "--r",
        type=int_range,
        default=None,
        help="Range of r as a..b or a single r. Defaults to 0..k^2.",
    )
    parser.add_argument(
        "--sci",
        action="store_const",
        default=False,
        const=True,
        help="Toggle to print coefficients in scientific notation.",
    )
    add_table_arguments(parser)
    add_output_arguments(parser)
    config = build_config(parser, "coeffs", argv)

    table = load_table(config, config.k)
    emit(report.coefficient_rows(table, config.r_values((0, table.degree)), config.sci), config)
    return 0


def cmd_table1(argv: Sequence[str]) -> int:
    """Five estimators against exact c_r(k) for every r."""
    parser = new_parser("Estimator comparison")
    parser.add_argument("--k", type=int, default=7, help="Moment index k. Defaults to 7.")
    parser.add_argument(
        "--r",
        type=int_range,
        default=None,
        help="Range of r as a..b or a single r. Defaults to 1..k^2.",
    )
    add_table_arguments(parser)
    add_output_arguments(parser)
    config = build_config(parser, "table1", argv)

    table = load_table(config, config.k)
    rows = report.table1_rows(table, config.r_values((1, table.degree)), config.jobs)
    emit(rows, config)
    return 0


def cmd_table2(argv: Sequence[str]) -> int:
    """Location of the largest coefficient against k^2 - mu."""
    parser = new_parser("Largest coefficient")
    parser.add_argument(
        "--range",
        type=int_range,
        default=(2, 40),
        help="Range of k as a..b. Defaults to 2..40.",
    )
    parser.add_argument(
        "--rho", type=float, default=1.0, help="Width parameter of the interval. Defaults to 1."
    )
    add_table_arguments(parser)
    add_output_arguments(parser)
    config = build_config(parser, "table2", argv)

    ks = config.k_values()
    print(f"Processing {len(ks)} values of k... ", end="", flush=True, file=sys.stderr)
    rows = report.table2_rows(ks, config.rho, config.cache(), config.method, config.jobs)
    print("DONE", file=sys.stderr)
    emit(rows, config)
    return 0


def cmd_figure1(argv: Sequence[str]) -> int:
    """Estimator ratios at every stride-th r, for plotting elsewhere."""
    parser = new_parser("Estimator sweep")
    parser.add_argument("--k", type=int, default=100, help="Moment index k. Defaults to 100.")
    parser.add_argument(
        "--stride", type=int, default=1, help="Sample every stride-th r. Defaults to 1."
    )
    parser.add_argument(
        "--estimators",
        type=estimator_list,
        default=None,
        help="Comma separated estimators. Defaults to uniform,saddle,precise.",
    )
    parser.add_argument("--J", type=int, default=4, help="Order of the precise expansion.")
    parser.add_argument("--M", type=int, default=7, help="Order of the saddle correction.")
    add_table_arguments(parser)
    add_output_arguments(parser)
    config = build_config(parser, "figure1", argv)

    table = load_table(config, config.k)
    estimators = config.estimators or report.FIGURE1_ESTIMATORS
    rows = report.figure1_rows(table, config.stride, estimators, config.J, config.M, config.jobs)
    emit(rows, config)
    return 0


def cmd_series(argv: Sequence[str]) -> int:
    """Exact polynomials and series of the large-k expansion."""
    parser = new_parser("Series")
    parser.add_argument(
        "kind",
        metavar="kind",
        type=str,
        choices=SERIES_KINDS,
        help=f"One of {', '.join(SERIES_KINDS)}.",
    )
    parser.add_argument("order", metavar="order", type=int, help="Index j or truncation order J.")
    parser.add_argument("--k", type=int, default=None, help="Moment index k, where needed.")
    parser.add_argument("-o", "--out", type=str, default=None, help="Output file.")
    add_logging_arguments(parser)
    config = build_config(parser, "series", argv)

    j, k = config.order, config.k
    if config.kind == "g":
        text = g_polynomial(j).to_text()
    elif config.kind == "q":
        text = q_polynomial(j).to_text()
    elif config.kind == "qtilde":
        text = q_tilde_polynomial(j).to_text()
    elif config.kind == "b":
        text = moment_b_polynomial(j).to_text()
    elif config.kind == "lambda":
        text = report.format_rational(lagrange_lambda(j, k))
    elif config.kind == "u":
        text = series_u(k, j).to_polynomial("x").to_text()
    elif config.kind == "U":
        text = series_U(k, j).to_polynomial("x").to_text()
    else:
        text = series_logPk(k, j).to_polynomial("x").to_text()

    emit_text(text, config)
    return 0


def cmd_maxcoeff(argv: Sequence[str]) -> int:
    """Largest coefficients, unimodality and the predicted interval, per k."""
    parser = new_parser("Maximal coefficient")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="Moment index k.")
    group.add_argument("--range", type=int_range, help="Range of k as a..b.")
    parser.add_argument(
        "--rho", type=float, default=1.0, help="Width parameter of the interval. Defaults to 1."
    )
    add_table_arguments(parser)
    add_output_arguments(parser)
    config = build_config(parser, "maxcoeff", argv)

    rows = report.maximum_rows(
        config.k_values(), config.rho, config.cache(), config.method, config.jobs
    )
    emit(rows, config)
    return 0


def cmd_saddle(argv: Sequence[str]) -> int:
    """Saddle point data per r."""
    parser = new_parser("Saddle point")
    parser.add_argument("--k", type=int, required=True, help="Moment index k.")
    parser.add_argument(
        "--r",
        type=int_range,
        default=None,
        help="Range of r as a..b or a single r. Defaults to 1..k^2-1.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="Worker processes for sweeps. Defaults to 1.",
    )
    add_output_arguments(parser)
    config = build_config(parser, "saddle", argv)

    rows = report.saddle_rows(config.k, config.r_values((1, config.k ** 2 - 1)), config.jobs)
    emit(rows, config)
    return 0


OP_DICT = {
    "coeffs": cmd_coeffs,
    "table1": cmd_table1,
    "table2": cmd_table2,
    "figure1": cmd_figure1,
    "series": cmd_series,
    "maxcoeff": cmd_maxcoeff,
    "saddle": cmd_saddle,
}
OP_LIST = list(OP_DICT.keys())


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)

    parser = ArgumentParser("MomentPoly command line", allow_abbrev=False)
    parser.add_argument(
        "operation",
        metavar="operation",
        type=str,
        choices=OP_LIST,
        help="Specify operation",
    )
    args, _ = parser.parse_known_args(argv)
    print(f"MomentPoly {momentpoly.__version__}", file=sys.stderr)

    try:
        return OP_DICT[args.operation](argv)
    except (MomentPolyError, ValueError, OSError) as e:
        logging.exception("Error occurred in operation", extra={"operation": args.operation})
        print(f"ERROR: {e}", file=sys.stderr)
        return 2
