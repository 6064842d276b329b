from __future__ import annotations

import argparse
import pathlib
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .asymptotics import Estimator, MAX_GAMMA_ORDER, MAX_PRECISE_ORDER
from .exact import TableCache, TableMethod, resolve_cache_dir
from .series import MAX_ORDER

MAX_TABLE2_K = 120
FORMATS = ["csv", "json"]
SERIES_KINDS = ["g", "q", "qtilde", "b", "u", "U", "logPk", "lambda"]


def int_range(text: str) -> Tuple[int, int]:
    """``a..b`` (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    if not sep:
        value = int(text)
        return value, value

    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"Empty range: {text}")
    return lo, hi


def estimator_list(text: str) -> List[Estimator]:
    return [Estimator.from_str(name.strip()) for name in text.split(",") if name.strip()]


@dataclass
class RunConfig:
    """Validated settings of one command line run."""

    command: str
    k: Optional[int] = None
    k_range: Optional[Tuple[int, int]] = None
    r_range: Optional[Tuple[int, int]] = None
    stride: int = 1
    estimators: List[Estimator] = field(default_factory=list)
    J: int = 4
    M: int = 7
    rho: float = 1.0
    cache_dir: Optional[pathlib.Path] = None
    out: Optional[pathlib.Path] = None
    format: str = "csv"
    sci: bool = False
    jobs: int = 1
    method: TableMethod = TableMethod.PRODUCT
    kind: Optional[str] = None
    order: Optional[int] = None

    @classmethod
    def from_args(cls, command: str, args: argparse.Namespace) -> RunConfig:
        cache_dir = getattr(args, "cache_dir", None)
        config = cls(
            command=command,
            k=getattr(args, "k", None),
            k_range=getattr(args, "range", None),
            r_range=getattr(args, "r", None),
            stride=getattr(args, "stride", 1),
            estimators=getattr(args, "estimators", None) or [],
            J=getattr(args, "J", 4),
            M=getattr(args, "M", 7),
            rho=getattr(args, "rho", 1.0),
            cache_dir=resolve_cache_dir(cache_dir),
            out=pathlib.Path(args.out) if getattr(args, "out", None) else None,
            format=getattr(args, "format", "csv"),
            sci=getattr(args, "sci", False),
            jobs=getattr(args, "jobs", 1),
            method=TableMethod.from_str(getattr(args, "method", "product")),
            kind=getattr(args, "kind", None),
            order=getattr(args, "order", None),
        )
        config.validate()
        return config

    def validate(self):
        """Raise ValueError on settings no command can run with."""
        if self.k is not None:
            minimum = 1 if self.command in ("coeffs", "series") else 2
            if self.k < minimum:
                raise ValueError(f"--k must be >= {minimum}, got {self.k}")

        if self.r_range is not None and self.r_range[0] < 0:
            raise ValueError(f"--r must be non-negative, got {self.r_range}")
        if self.r_range is not None and self.k is not None and self.r_range[1] > self.k * self.k:
            raise ValueError(f"--r must lie within 0..{self.k * self.k}")

        if self.k_range is not None:
            lo, hi = self.k_range
            if lo < 2 or hi > MAX_TABLE2_K:
                raise ValueError(f"--range must lie within 2..{MAX_TABLE2_K}, got {lo}..{hi}")

        if self.stride < 1:
            raise ValueError(f"--stride must be >= 1, got {self.stride}")
        if not 1 <= self.J <= MAX_PRECISE_ORDER:
            raise ValueError(f"--J must lie within 1..{MAX_PRECISE_ORDER}, got {self.J}")
        if not 5 <= self.M <= MAX_GAMMA_ORDER + 1:
            raise ValueError(f"--M must lie within 5..{MAX_GAMMA_ORDER + 1}, got {self.M}")
        if self.rho <= 0:
            raise ValueError(f"--rho must be positive, got {self.rho}")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be >= 1, got {self.jobs}")
        if self.format not in FORMATS:
            raise ValueError(f"Unknown format: {self.format}")

        if self.command == "series":
            if self.kind not in SERIES_KINDS:
                raise ValueError(f"Unknown series: {self.kind}")
            if self.order is None or not 1 <= self.order <= MAX_ORDER:
                raise ValueError(f"Series order must lie within 1..{MAX_ORDER}")
            if self.kind in ("u", "U", "logPk", "lambda") and self.k is None:
                raise ValueError(f"Series {self.kind} needs --k")

    def cache(self) -> TableCache:
        cache = TableCache(self.cache_dir)
        cache.ensure_writable()
        return cache

    def r_values(self, default: Tuple[int, int]) -> range:
        lo, hi = self.r_range if self.r_range is not None else default
        return range(lo, hi + 1)

    def k_values(self) -> range:
        lo, hi = self.k_range if self.k_range is not None else (self.k, self.k)
        return range(lo, hi + 1)
