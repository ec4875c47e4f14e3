"""Floating-point diagnostics for the growth law B(x) ~ (pi**2/12) x**2 / log x.

Exact integers come from :mod:`sopfr.aggregates` and :mod:`sopfr.prime_sums`;
floats enter only here. All series are summed with ``math.fsum`` (exactly
rounded), so results are reproducible bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from .aggregates import b_sublinear, bdist_sublinear
from .errors import DomainError
from .prime_sums import mertens_sum, prime_sum_table

__all__ = [
    "ZETA2",
    "HALF_ZETA2",
    "RatioReport",
    "MertensRow",
    "model_B",
    "model_P",
    "corollary_ratio",
    "basel_log_sum",
    "exact_value",
    "ratio_table",
    "mertens_table",
]

ZETA2 = math.pi**2 / 6
HALF_ZETA2 = math.pi**2 / 12

TARGETS = ("B", "B_dist", "P")


@dataclass(frozen=True)
class RatioReport:
    x: int
    exact: int
    model: float
    ratio: float
    scaled_error: float

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class MertensRow:
    x: int
    sum_recip_p: float
    loglog_x: float
    difference: float
    sum_1_over_p_p_minus_1: float

    def as_dict(self) -> dict:
        return asdict(self)


def _log_of(x) -> float:
    if x < 2:
        raise DomainError(f"model defined for x >= 2, got {x}")
    return math.log(x)


def model_B(x) -> float:
    """(pi**2 / 12) * x**2 / log x."""
    return HALF_ZETA2 * (float(x) * float(x)) / _log_of(x)


def model_P(x) -> float:
    """x**2 / (2 log x)."""
    return (float(x) * float(x)) / (2.0 * _log_of(x))


def corollary_ratio(x: int) -> float:
    """B(x) / P(x) from exact integers; tends to pi**2 / 6."""
    if x < 2:
        raise DomainError(f"x must be >= 2, got {x}")
    return b_sublinear(x).value / prime_sum_table(x)[x]


def basel_log_sum(x: int, power: int = 1, *, chunk: int = 1 << 20) -> float:
    """sum_{1 <= n <= x/2} 1 / (n**2 * log(x/n)**power)."""
    if power not in (1, 2):
        raise DomainError(f"power must be 1 or 2, got {power}")
    if x < 4:
        raise DomainError(f"x must be >= 4, got {x}")
    top = x // 2

    def terms():
        for lo in range(1, top + 1, chunk):
            n = np.arange(lo, min(lo + chunk, top + 1), dtype=np.float64)
            yield from (1.0 / (n * n * np.log(x / n) ** power)).tolist()

    return math.fsum(terms())


def exact_value(x: int, target: str) -> int:
    """Exact B, B_dist or P at x via the quotient-table routes."""
    if target == "B":
        return b_sublinear(x).value
    if target == "B_dist":
        return bdist_sublinear(x).value
    if target == "P":
        return prime_sum_table(x)[x]
    raise DomainError(f"unknown target {target!r}; expected one of {TARGETS}")


def ratio_table(xs: Iterable[int], target: str = "B") -> list[RatioReport]:
    """One row per x comparing the exact sum with its leading-order model.

    B and B_dist share the model (pi**2/12) x**2/log x; P uses x**2/(2 log x).
    """
    if target not in TARGETS:
        raise DomainError(f"unknown target {target!r}; expected one of {TARGETS}")
    model = model_P if target == "P" else model_B
    rows = []
    for x in xs:
        exact = exact_value(x, target)
        m = model(x)
        ratio = exact / m
        rows.append(RatioReport(x, exact, m, ratio, (ratio - 1.0) * math.log(x)))
    return rows


def mertens_table(xs: Iterable[int], *, segment_size: int | None = None) -> list[MertensRow]:
    rows = []
    for x in xs:
        s = mertens_sum(x, segment_size=segment_size)
        ll = math.log(math.log(x))
        rows.append(MertensRow(x, s.reciprocal, ll, s.reciprocal - ll, s.reciprocal_p_pm1))
    return rows
