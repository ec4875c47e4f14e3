"""Exact prime counts and prime sums, directly and via quotient tables.

The sublinear path runs the classic quotient-table recurrence: start from the
sum (or count) of all integers 2..v for every v in {x // n}, then strike out
composites prime by prime. The recurrence is vectorised with numpy in uint64,
i.e. modulo 2**64. Every step is a ring operation, so the residues are exact
whenever the true values lie below 2**64; beyond that a second pass modulo a
31-bit prime is combined by CRT.
"""
from __future__ import annotations

import math
from math import isqrt
from typing import NamedTuple

import numpy as np

from ._primes import small_primes
from .errors import DIRECT_BUDGET, SUBLINEAR_BUDGET, DomainError, ResourceError
from .sieve_engine import iter_prime_segments

__all__ = [
    "QuotientTable",
    "prime_sum_direct",
    "prime_sum_table",
    "prime_count_table",
    "prime_count",
    "MertensSums",
    "mertens_sum",
]

_M31 = 2**31 - 1
_TWO64 = 1 << 64


class QuotientTable:
    """Values attached to every distinct ``x // n``.

    Keys ``v <= r = isqrt(x)`` live in ``small[v]``; larger keys ``v = x // n``
    live in ``large[n]`` for ``1 <= n <= x // (r + 1)``. Index 0 of both arrays
    is unused padding. Values are int64 or, when they may exceed int64, Python
    ints in object arrays.
    """

    def __init__(self, x: int, small: np.ndarray, large: np.ndarray):
        self.x = x
        self.r = isqrt(x)
        self.small = small
        self.large = large
        small.flags.writeable = False
        large.flags.writeable = False

    @property
    def n_large(self) -> int:
        return self.x // (self.r + 1)

    def __len__(self) -> int:
        return self.r + self.n_large

    def keys(self) -> np.ndarray:
        """All keys in increasing order."""
        small = np.arange(1, self.r + 1, dtype=np.int64)
        large = self.x // np.arange(self.n_large, 0, -1, dtype=np.int64)
        return np.concatenate((small, large))

    def __contains__(self, v: int) -> bool:
        if v < 1 or v > self.x:
            return False
        return v <= self.r or self.x // (self.x // v) == v

    def __getitem__(self, v: int) -> int:
        if v < 1:
            if v == 0:
                return 0
            raise KeyError(v)
        if v <= self.r:
            return int(self.small[v])
        n = self.x // v
        if n < 1 or self.x // n != v:
            raise KeyError(f"{v} is not of the form {self.x} // n")
        return int(self.large[n])

    def items(self):
        for v in self.keys().tolist():
            yield v, self[v]

    def __repr__(self) -> str:
        return f"QuotientTable(x={self.x}, keys={len(self)})"


def _sum_2_to(v: np.ndarray) -> np.ndarray:
    """2 + 3 + ... + v elementwise, modulo 2**64."""
    v = v.astype(np.uint64)
    # halve the even factor first so the product wraps cleanly
    even = v % 2 == 0
    a = np.where(even, v // 2, v)
    b = np.where(even, v + 1, (v + 1) // 2)
    return a * b - np.uint64(1)


def _recurrence(x: int, weighted: bool, modulus: int | None):
    """Run the striking-out recurrence; arithmetic mod 2**64 or mod ``modulus``."""
    r = isqrt(x)
    n_large = x // (r + 1)
    vs_small = np.arange(r + 1, dtype=np.int64)
    vs_large = x // np.maximum(np.arange(n_large + 1, dtype=np.int64), 1)
    if weighted:
        if modulus is None:
            small = _sum_2_to(vs_small)
            large = _sum_2_to(vs_large)
        else:
            # v*(v+1)/2 mod m computed from v mod 2m keeps the halving exact
            small = _half_product_mod(vs_small, modulus)
            large = _half_product_mod(vs_large, modulus)
    else:
        dtype = np.uint64 if modulus is None else np.int64
        small = (vs_small - 1).astype(dtype)
        large = (vs_large - 1).astype(dtype)
    small[0] = 0
    large[0] = 0

    for p in range(2, r + 1):
        if small[p] == small[p - 1]:
            continue
        base = small[p - 1]
        pp = p * p
        w = p if weighted else 1

        top = min(n_large, x // pp)
        if top >= 1:
            # keys x//n with n <= top; x//(n*p) is large-indexed while n*p <= n_large
            split = min(top, n_large // p)
            gathered = np.empty(top, dtype=large.dtype)
            gathered[:split] = large[p : split * p + 1 : p]
            if split < top:
                n = np.arange(split + 1, top + 1, dtype=np.int64)
                gathered[split:] = small[x // (n * p)]
            if modulus is None:
                large[1 : top + 1] -= (gathered - base) * np.uint64(w)
            else:
                large[1 : top + 1] = (large[1 : top + 1] - (gathered - base) * w) % modulus
        if pp <= r:
            idx = np.arange(pp, r + 1, dtype=np.int64) // p
            if modulus is None:
                small[pp:] -= (small[idx] - base) * np.uint64(w)
            else:
                small[pp:] = (small[pp:] - (small[idx] - base) * w) % modulus
    return small, large


def _half_product_mod(v: np.ndarray, m: int) -> np.ndarray:
    t = v % (2 * m)
    even = t % 2 == 0
    a = np.where(even, t // 2, t) % m
    b = np.where(even, t + 1, (t + 1) // 2) % m
    return (a * b - 1) % m


def _exact_values(res64: np.ndarray, resm: np.ndarray | None) -> np.ndarray:
    if resm is None:
        return res64.astype(np.int64) if res64.max(initial=0) < 1 << 63 else res64.astype(object)
    # CRT: value = a + 2**64 * t with t = (b - a) * inv(2**64) mod m
    inv = pow(_TWO64 % _M31, -1, _M31)
    a_mod = (res64 % np.uint64(_M31)).astype(np.int64)
    t = ((resm - a_mod) % _M31) * inv % _M31
    return res64.astype(object) + t.astype(object) * _TWO64


def _prime_sum_bound(x: int) -> int:
    # P(x) <= x * pi(x) and pi(x) < 1.25506 x / log x for x > 1
    if x < 17:
        return x * x
    return int(1.25506 * x * x / math.log(x)) + 1


def prime_sum_table(x: int, *, budget: int = SUBLINEAR_BUDGET) -> QuotientTable:
    """P(v) = sum of primes <= v for every key v = x // n, in O(x**0.75) time."""
    return _table(x, weighted=True, budget=budget)


def prime_count_table(x: int, *, budget: int = SUBLINEAR_BUDGET) -> QuotientTable:
    """pi(v) for every key v = x // n."""
    return _table(x, weighted=False, budget=budget)


def _table(x: int, weighted: bool, budget: int) -> QuotientTable:
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    if x > budget:
        raise ResourceError(f"quotient table for x={x} exceeds budget {budget}")
    small64, large64 = _recurrence(x, weighted, None)
    if weighted and _prime_sum_bound(x) >= _TWO64:
        small_m, large_m = _recurrence(x, weighted, _M31)
    else:
        small_m = large_m = None
    return QuotientTable(x, _exact_values(small64, small_m), _exact_values(large64, large_m))


def prime_count(x: int) -> int:
    """pi(x), exact."""
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x < 2:
        return 0
    return prime_count_table(x)[x]


def prime_sum_direct(
    x: int, *, segment_size: int | None = None, budget: int = DIRECT_BUDGET
) -> int:
    """P(x) by sieving every prime up to x."""
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x > budget:
        raise ResourceError(
            f"direct prime sum to {x} exceeds budget {budget}; use prime_sum_table"
        )
    return sum(int(seg.sum()) for seg in iter_prime_segments(x, segment_size))


class MertensSums(NamedTuple):
    x: int
    reciprocal: float
    """sum of 1/p over p <= x"""
    reciprocal_p_pm1: float
    """sum of 1/(p(p-1)) over p <= x; converges, so it bounds the prime-power tail"""


def mertens_sum(
    x: int, *, segment_size: int | None = None, budget: int = DIRECT_BUDGET
) -> MertensSums:
    """Reciprocal prime sums, rounded once from the exact sum of the terms.

    ``math.fsum`` over the full term stream keeps the result independent of
    how the primes were segmented.
    """
    if x < 2:
        raise DomainError(f"x must be >= 2, got {x}")
    if x > budget:
        raise ResourceError(f"prime enumeration to {x} exceeds budget {budget}")
    segs = [seg.astype(np.float64) for seg in iter_prime_segments(x, segment_size)]
    recip = math.fsum(v for seg in segs for v in (1.0 / seg).tolist())
    tail = math.fsum(v for seg in segs for v in (1.0 / (seg * (seg - 1.0))).tolist())
    return MertensSums(x, recip, tail)
