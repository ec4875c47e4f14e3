"""Summatory functions B(x) = sum sopfr(n) and B_dist(x) = sum sopf(n), n <= x.

Three independent routes:

* ``direct``: segmented sweep evaluating the pointwise function,
* ``prime_contrib``: each prime p contributes p * (x//p + x//p**2 + ...),
* ``sublinear``: sum over p of p * (x//p) regrouped as sum_n P(x // n), read
  off a quotient table, plus the prime-power correction from p <= sqrt(x).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from ._primes import small_primes
from .errors import (
    DIRECT_BUDGET,
    PRIME_CONTRIB_BUDGET,
    SUBLINEAR_BUDGET,
    DomainError,
    ResourceError,
)
from .prime_sums import QuotientTable, prime_sum_table
from .sieve_engine import (
    Method,
    SummationResult,
    _map_ordered,
    iter_prime_segments,
    make_plan,
    sweep_sum,
)

__all__ = [
    "Method",
    "CrossCheckReport",
    "b_direct",
    "b_prime_contrib",
    "b_sublinear",
    "bdist_direct",
    "bdist_prime_contrib",
    "bdist_sublinear",
    "summatory",
    "cross_check",
    "AUTO_DIRECT_LIMIT",
]

# auto-selection switches from the sweep to the quotient table above this x
AUTO_DIRECT_LIMIT = 10**7


def _check_x(x: int) -> int:
    if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
        raise TypeError(f"x must be an integer, got {type(x).__name__}")
    x = int(x)
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    return x


def b_direct(x: int, *, segment_size: int | None = None, workers: int = 1,
             budget: int = DIRECT_BUDGET) -> SummationResult:
    x = _check_x(x)
    return sweep_sum(x, "sopfr", make_plan(x, segment_size), workers=workers, budget=budget)


def bdist_direct(x: int, *, segment_size: int | None = None, workers: int = 1,
                 budget: int = DIRECT_BUDGET) -> SummationResult:
    x = _check_x(x)
    return sweep_sum(x, "sopf", make_plan(x, segment_size), workers=workers, budget=budget)


def _prime_power_tail(x: int, p: int) -> int:
    """x//p**2 + x//p**3 + ... without forming p**k beyond x."""
    total = 0
    q = x // p
    while q >= p:
        q //= p
        total += q
    return total


def _correction(x: int) -> int:
    return sum(p * _prime_power_tail(x, p) for p in small_primes(isqrt(x)).tolist())


def _prime_contrib(x: int, distinct: bool, segment_size, workers, budget) -> SummationResult:
    x = _check_x(x)
    if x > budget:
        raise ResourceError(f"prime-contribution sum to {x} exceeds budget {budget}")
    t0 = time.perf_counter()

    def seg_sum(ps: np.ndarray) -> int:
        # each term p * (x // p) <= x, so an int64 segment sum is safe while
        # len(ps) * x < 2**63
        assert ps.size * x < 1 << 63
        return int((ps * (x // ps)).sum())

    segs = list(iter_prime_segments(x, segment_size))
    total = sum(_map_ordered(seg_sum, segs, workers))
    if not distinct:
        total += _correction(x)
    method = Method.PRIME_CONTRIB
    return SummationResult(x, total, method, time.perf_counter() - t0,
                           "sopf" if distinct else "sopfr")


def b_prime_contrib(x: int, *, segment_size: int | None = None, workers: int = 1,
                    budget: int = PRIME_CONTRIB_BUDGET) -> SummationResult:
    """B(x) as the sum over primes p <= x of p * sum_k x // p**k."""
    return _prime_contrib(x, False, segment_size, workers, budget)


def bdist_prime_contrib(x: int, *, segment_size: int | None = None, workers: int = 1,
                        budget: int = PRIME_CONTRIB_BUDGET) -> SummationResult:
    """B_dist(x) as the sum over primes p <= x of p * (x // p)."""
    return _prime_contrib(x, True, segment_size, workers, budget)


def main_term(table: QuotientTable) -> int:
    """sum_{n <= x} P(x // n), grouping n into blocks of equal quotient.

    The key v occurs for x//v - x//(v+1) values of n; P(0) = P(1) = 0 so
    blocks with v < 2 add nothing.
    """
    x = table.x
    keys = table.keys()
    counts = (x // keys - x // (keys + 1)).tolist()
    n_small = table.r
    vals = table.small[1:].tolist() + table.large[1:][::-1].tolist()
    assert len(vals) == len(counts) == n_small + table.n_large
    return sum(v * c for v, c in zip(vals, counts))


def _sublinear(x: int, distinct: bool, budget: int) -> SummationResult:
    x = _check_x(x)
    if x > budget:
        raise ResourceError(f"sublinear sum to {x} exceeds budget {budget}")
    t0 = time.perf_counter()
    total = main_term(prime_sum_table(x, budget=budget))
    if not distinct:
        total += _correction(x)
    return SummationResult(x, total, Method.SUBLINEAR, time.perf_counter() - t0,
                           "sopf" if distinct else "sopfr")


def b_sublinear(x: int, *, budget: int = SUBLINEAR_BUDGET) -> SummationResult:
    """B(x) in O(x**0.75) time and O(sqrt(x)) space."""
    return _sublinear(x, False, budget)


def bdist_sublinear(x: int, *, budget: int = SUBLINEAR_BUDGET) -> SummationResult:
    return _sublinear(x, True, budget)


_DISPATCH = {
    ("B", Method.DIRECT): b_direct,
    ("B", Method.PRIME_CONTRIB): b_prime_contrib,
    ("B", Method.SUBLINEAR): b_sublinear,
    ("B_dist", Method.DIRECT): bdist_direct,
    ("B_dist", Method.PRIME_CONTRIB): bdist_prime_contrib,
    ("B_dist", Method.SUBLINEAR): bdist_sublinear,
}


def summatory(x: int, target: str = "B", method: Method | str | None = None,
              **kwargs) -> SummationResult:
    """Evaluate B or B_dist at x; ``method=None`` picks direct up to 10**7."""
    if target not in ("B", "B_dist"):
        raise DomainError(f"unknown target {target!r}")
    if method is None:
        method = Method.DIRECT if x <= AUTO_DIRECT_LIMIT else Method.SUBLINEAR
    method = Method(method)
    fn = _DISPATCH[target, method]
    if method is Method.SUBLINEAR:
        kwargs.pop("segment_size", None)
        kwargs.pop("workers", None)
    return fn(x, **kwargs)


@dataclass
class CrossCheckReport:
    x: int
    target: str
    values: dict[Method, int]
    timings: dict[Method, float] = field(default_factory=dict)
    skipped: dict[Method, str] = field(default_factory=dict)

    @property
    def all_equal(self) -> bool:
        # skipped methods never count as agreement
        return not self.skipped and len(set(self.values.values())) == 1

    @property
    def value(self) -> int | None:
        return next(iter(self.values.values()), None) if self.all_equal else None


def cross_check(x: int, methods=None, target: str = "B", *, workers: int = 1,
                segment_size: int | None = None) -> CrossCheckReport:
    """Run each method at x and compare the exact values."""
    x = _check_x(x)
    methods = [Method(m) for m in (methods or list(Method))]
    report = CrossCheckReport(x, target, {})
    for m in methods:
        try:
            res = summatory(x, target, m, workers=workers, segment_size=segment_size)
        except ResourceError as exc:
            report.skipped[m] = str(exc)
            continue
        report.values[m] = res.value
        report.timings[m] = res.elapsed
    return report
