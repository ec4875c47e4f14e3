"""Segmented sweeps over [1, x] with bounded memory and exact folding."""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from math import isqrt
from typing import Callable, Iterator

import numpy as np

from ._primes import primes_in_window, small_primes
from .errors import DIRECT_BUDGET, DomainError, ResourceError
from .factor_core import sopf_block, sopfr_block

__all__ = [
    "DEFAULT_SEGMENT_SIZE",
    "Method",
    "SegmentPlan",
    "SummationResult",
    "default_segment_size",
    "make_plan",
    "sweep_sum",
    "iter_prime_segments",
    "primes_up_to",
]

DEFAULT_SEGMENT_SIZE = 1 << 22
SEGMENT_SIZE_ENV = "SOPFR_SEGMENT_SIZE"

_KERNELS: dict[str, Callable] = {"sopfr": sopfr_block, "sopf": sopf_block}


class Method(str, Enum):
    DIRECT = "direct"
    PRIME_CONTRIB = "prime_contrib"
    SUBLINEAR = "sublinear"


@dataclass(frozen=True)
class SummationResult:
    """Exact value of a summatory function at x, with how it was obtained."""

    x: int
    value: int
    method: Method
    elapsed: float = field(default=0.0, compare=False)
    function: str = "sopfr"

    def __post_init__(self):
        if not 0 <= self.value < 1 << 128:
            raise OverflowError(f"summatory value {self.value} outside 128-bit range")


def default_segment_size() -> int:
    env = os.environ.get(SEGMENT_SIZE_ENV)
    if env is None:
        return DEFAULT_SEGMENT_SIZE
    try:
        size = int(env)
    except ValueError:
        raise DomainError(f"{SEGMENT_SIZE_ENV}={env!r} is not an integer") from None
    if size < 1:
        raise DomainError(f"{SEGMENT_SIZE_ENV} must be positive, got {size}")
    return size


@dataclass(frozen=True, eq=False)
class SegmentPlan:
    x: int
    segment_size: int
    base_primes: np.ndarray

    def segments(self) -> Iterator[tuple[int, int]]:
        """Inclusive (lo, hi) blocks tiling [1, x] in ascending order."""
        lo = 1
        while lo <= self.x:
            hi = min(lo + self.segment_size - 1, self.x)
            yield lo, hi
            lo = hi + 1

    def check(self, x: int) -> None:
        if self.x != x:
            raise DomainError(f"plan built for x={self.x}, used with x={x}")


def make_plan(x: int, segment_size: int | None = None) -> SegmentPlan:
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    if segment_size is None:
        segment_size = default_segment_size()
    if segment_size < 1:
        raise DomainError(f"segment_size must be positive, got {segment_size}")
    return SegmentPlan(x, segment_size, small_primes(isqrt(x)))


def _map_ordered(fn, items, workers: int):
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def sweep_sum(
    x: int,
    f: str = "sopfr",
    plan: SegmentPlan | None = None,
    *,
    workers: int = 1,
    budget: int = DIRECT_BUDGET,
) -> SummationResult:
    """Sum ``f(n)`` for n = 1..x by direct evaluation, one segment at a time.

    ``f`` is ``"sopfr"`` or ``"sopf"``. Partial sums are exact Python ints,
    so the result does not depend on segment size or worker count.
    """
    if f not in _KERNELS:
        raise DomainError(f"unknown pointwise function {f!r}")
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    if x > budget:
        raise ResourceError(f"direct sweep to {x} exceeds budget {budget}")
    t0 = time.perf_counter()
    plan = plan or make_plan(x)
    plan.check(x)
    kernel = _KERNELS[f]

    def block_sum(seg):
        lo, hi = seg
        return int(kernel(lo, hi, plan.base_primes).sum())

    total = sum(_map_ordered(block_sum, list(plan.segments()), workers))
    return SummationResult(x, total, Method.DIRECT, time.perf_counter() - t0, f)


def iter_prime_segments(
    x: int, segment_size: int | None = None, lo: int = 1
) -> Iterator[np.ndarray]:
    """Yield the primes in [lo, x] as ascending int64 arrays, one per segment."""
    if segment_size is None:
        segment_size = default_segment_size()
    base = small_primes(isqrt(x)) if x >= 1 else small_primes(0)
    lo = max(lo, 1)
    while lo <= x:
        hi = min(lo + segment_size - 1, x)
        yield primes_in_window(lo, hi, base)
        lo = hi + 1


def primes_up_to(
    x: int, *, segment_size: int | None = None, budget: int = DIRECT_BUDGET
) -> np.ndarray:
    """All primes <= x, ascending."""
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x > budget:
        raise ResourceError(
            f"enumerating primes to {x} exceeds budget {budget}; "
            "use iter_prime_segments for streaming enumeration"
        )
    parts = list(iter_prime_segments(x, segment_size))
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)
