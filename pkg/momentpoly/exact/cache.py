from __future__ import annotations

import logging
import os
import pathlib
import tempfile
from fractions import Fraction
from typing import Optional, Union

from ..errors import CacheError
from .tools import decimal_to_int, int_to_decimal
from .types import ExactCoefficientTable

HEADER = "momentpoly-cache v1"
ENV_VAR = "MOMENTPOLY_CACHE"
DEFAULT_DIR = "./cache"


def resolve_cache_dir(flag: Optional[str] = None) -> pathlib.Path:
    """Flag, then MOMENTPOLY_CACHE, then ./cache."""
    if flag:
        return pathlib.Path(flag)
    return pathlib.Path(os.environ.get(ENV_VAR) or DEFAULT_DIR)


class TableCache:
    """Directory of ``bk_<k>.tbl`` text files, one per k.

    Layout: a header line, ``k=<k>``, ``c0=<num>/<den>``, then b_0 .. b_{k^2}
    one per line.
    """

    def __init__(self, directory: Union[str, os.PathLike]):
        self.directory = pathlib.Path(directory)

    def ensure_writable(self):
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise CacheError(f"Cannot create cache directory {self.directory}: {e}") from e

        if not os.access(self.directory, os.W_OK):
            raise CacheError(f"Cache directory {self.directory} is not writable")

    def path(self, k: int) -> pathlib.Path:
        return self.directory.joinpath(f"bk_{k}.tbl")

    def load(self, k: int) -> Optional[ExactCoefficientTable]:
        """Read the table for k, or None when it is missing or invalid."""
        path = self.path(k)
        if not path.is_file():
            logging.debug("Cache miss", extra={"k": k, "path": str(path)})
            return None

        try:
            with open(path, "r", encoding="ascii") as f:
                lines = f.read().splitlines()
            table = self._parse(k, lines)
        except (ValueError, ZeroDivisionError) as e:
            logging.warning(
                "Rejected cache file", extra={"k": k, "path": str(path), "reason": str(e)}
            )
            return None

        logging.info("Cache hit", extra={"k": k, "path": str(path)})
        return table

    @staticmethod
    def _parse(k: int, lines) -> ExactCoefficientTable:
        if len(lines) != k * k + 4:
            raise ValueError(f"expected {k * k + 4} lines, found {len(lines)}")
        if lines[0] != HEADER:
            raise ValueError(f"bad header {lines[0]!r}")
        if lines[1] != f"k={k}":
            raise ValueError(f"bad k line {lines[1]!r}")
        if not lines[2].startswith("c0="):
            raise ValueError(f"bad c0 line {lines[2]!r}")

        numerator, _, denominator = lines[2][len("c0="):].partition("/")
        c0 = Fraction(decimal_to_int(numerator), decimal_to_int(denominator or "1"))
        b = tuple(decimal_to_int(line) for line in lines[3:])
        if b[0] != 1:
            raise ValueError(f"b_0 is {b[0]}, not 1")
        return ExactCoefficientTable(k=k, b=b, c0=c0)

    def store(self, table: ExactCoefficientTable):
        """Write atomically: temporary file in the same directory, then rename."""
        self.ensure_writable()
        path = self.path(table.k)

        fd, temp_path = tempfile.mkstemp(
            prefix=f".bk_{table.k}.", suffix=".tmp", dir=self.directory
        )
        try:
            with os.fdopen(fd, "w", encoding="ascii", newline="\n") as f:
                f.write(f"{HEADER}\n")
                f.write(f"k={table.k}\n")
                f.write(
                    f"c0={int_to_decimal(table.c0.numerator)}/"
                    f"{int_to_decimal(table.c0.denominator)}\n"
                )
                for value in table.b:
                    f.write(int_to_decimal(value) + "\n")
            os.replace(temp_path, path)
        except BaseException:
            if os.path.exists(temp_path):
                os.remove(temp_path)
            raise

        logging.info("Stored table in cache", extra={"k": table.k, "path": str(path)})
