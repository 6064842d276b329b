from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class TailForm(Enum):
    FACTORIAL = "factorial"
    BINOMIAL = "binomial"

    @staticmethod
    def from_str(value: str) -> TailForm:
        for form in TailForm:
            if form.value == value:
                return form

        raise ValueError(f"Unknown tail form: {value}")


class UniformForm(Enum):
    # (r/k^2)^r C(k^2, r) ... (1 - r/k^2)^(k^2-r+1/2) r^(1/2)
    RATIO = "ratio"
    # sqrt(2 pi) e^(-k^2) / (k^2)! C(k^2, r) ... (k^2-r)^(k^2-r+1/2) r^(r+1/2)
    STIRLING = "stirling"


class Estimator(Enum):
    TAIL_LOW = "binomial_low"
    TAIL_HIGH = "binomial_high"
    PRECISE = "precise"
    SADDLE = "saddle"
    CORRECTED = "corrected"
    UNIFORM = "uniform"

    @staticmethod
    def from_str(value: str) -> Estimator:
        for estimator in Estimator:
            if estimator.value == value:
                return estimator

        raise ValueError(f"Unknown estimator: {value}")


@dataclass(frozen=True)
class SaddleData:
    """Saddle point u of N^(r-k^2) P_k(N) on the positive axis, with the
    curvature U = u h'(u) and f(u) = log P_k(u) - (k^2 - r) log u."""

    k: int
    r: int
    u: float
    U: float
    f_at_u: float


@dataclass(frozen=True, eq=False)
class GammaSeries:
    """Taylor coefficients of theta -> f(u e^(i theta)) about 0 and the
    coefficients mu_m of exp(sum_{n>=3} gamma_n theta^n).

    Both arrays are indexed by power; gammas[0] is f(u), gammas[1] vanishes at
    the saddle and gammas[2] = -U/2.
    """

    k: int
    r: int
    u: float
    U: float
    gammas: np.ndarray
    mus: np.ndarray

    @property
    def order(self) -> int:
        return len(self.gammas) - 1

    def gamma(self, n: int) -> complex:
        return complex(self.gammas[n])

    def mu(self, m: int) -> complex:
        return complex(self.mus[m])
