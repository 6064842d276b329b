class MomentPolyError(ValueError):
    """Base class for domain errors raised by momentpoly."""


class IntegralityViolation(MomentPolyError):
    """A coefficient that must be an integer came out with a denominator."""

    def __init__(self, k: int, r: int, value):
        super().__init__(f"b_{r}({k}) is not an integer: {value}")
        self.k = k
        self.r = r
        self.value = value


class IndexOutOfRange(MomentPolyError):
    def __init__(self, k: int, r: int):
        super().__init__(f"Index r={r} is outside 0..{k * k} for k={k}")
        self.k = k
        self.r = r


class EndpointExcluded(MomentPolyError):
    """The estimator is undefined at r = 0 and r = k^2."""

    def __init__(self, k: int, r: int):
        super().__init__(f"r={r} must lie strictly between 0 and {k * k} for k={k}")
        self.k = k
        self.r = r


class CorrectionDiverged(MomentPolyError):
    def __init__(self, k: int, r: int, order: int, bracket: float):
        super().__init__(
            f"Saddle correction up to M={order} is {bracket} (not positive) at k={k}, r={r}"
        )
        self.k = k
        self.r = r
        self.order = order
        self.bracket = bracket


class OrderLimitExceeded(MomentPolyError):
    def __init__(self, order: int, limit: int):
        super().__init__(f"Order {order} exceeds the supported limit {limit}")
        self.order = order
        self.limit = limit


class CacheError(MomentPolyError):
    """The coefficient cache directory cannot be used."""
