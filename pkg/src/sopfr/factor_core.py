"""Pointwise factorization and the additive functions sopfr / sopf.

Two routes are provided and are kept independent of each other:

* trial division by 2, 3 and then 6k +/- 1 for isolated inputs, and
* a smallest-prime-factor table (:class:`SpfTable`) for contiguous ranges.

Block kernels (:func:`sopfr_block`, :func:`sopf_block`) evaluate the functions
over a whole window at once and are what the segmented sweep folds.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from ._primes import small_primes
from .errors import (
    SPF_TABLE_BUDGET,
    TRIAL_DIVISION_BOUND,
    DomainError,
    ResourceError,
)

__all__ = [
    "Factorization",
    "SpfTable",
    "build_spf_table",
    "factorize",
    "sopfr",
    "sopf",
    "sopfr_block",
    "sopf_block",
]


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    return n


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = prod(p**e for p, e in factors)``."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def sopfr(self) -> int:
        return sum(p * e for p, e in self.factors)

    def sopf(self) -> int:
        return sum(p for p, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


@dataclass(frozen=True, eq=False)
class SpfTable:
    """Smallest prime factor of every integer in ``[lo, hi]``.

    ``spf[i]`` belongs to ``lo + i``; the unit 1 is stored as 0.
    """

    lo: int
    hi: int
    spf: np.ndarray

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, m: int) -> bool:
        return self.lo <= m <= self.hi

    def __getitem__(self, m: int) -> int:
        if not self.lo <= m <= self.hi:
            raise IndexError(f"{m} outside table range [{self.lo}, {self.hi}]")
        return int(self.spf[m - self.lo])


def build_spf_table(lo: int, hi: int, *, budget: int = SPF_TABLE_BUDGET) -> SpfTable:
    """Sieve smallest prime factors for ``lo..hi`` (inclusive).

    Windows far from the origin are fine: the primes up to ``isqrt(hi)`` are
    sieved internally. Entries hold the full prime, so int64 is used.
    """
    lo, hi = _check_n(lo), _check_n(hi)
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    size = hi - lo + 1
    if size > budget:
        raise ResourceError(
            f"SPF table of {size} entries exceeds budget {budget}; "
            "use the segmented driver (sieve_engine.sweep_sum) instead"
        )
    spf = np.zeros(size, dtype=np.int64)
    for p in small_primes(isqrt(hi)).tolist():
        start = max(p, -(-lo // p) * p) - lo
        if start >= size:
            continue
        view = spf[start::p]
        view[view == 0] = p
    # untouched entries >= 2 are primes; the unit keeps the 0 sentinel
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest + lo
    if lo == 1:
        spf[0] = 0
    spf.flags.writeable = False
    return SpfTable(lo, hi, spf)


def _trial_factors(n: int, start: int = 2) -> list[tuple[int, int]]:
    """Trial division of n by candidates >= start using the 2, 3, 6k+/-1 wheel.

    Assumes n has no prime factor below ``start``.
    """
    factors = []
    for p in (2, 3):
        if p >= start and n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    # largest 6k - 1 not above start (candidates below start are skipped)
    d = 5 + 6 * max(0, (start - 5) // 6)
    while d * d <= n:
        for q in (d, d + 2):
            if q < start or n % q:
                continue
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            factors.append((q, e))
        d += 6
    if n > 1:
        factors.append((n, 1))
    return factors


def factorize(n: int, table: SpfTable | None = None) -> Factorization:
    """Factor ``n`` using ``table`` if given, otherwise trial division.

    With a window table (``table.lo > 1``) only ``n`` itself is looked up;
    cofactors that fall below the window continue by trial division from the
    last prime found.
    """
    n = _check_n(n)
    if table is None:
        if n > TRIAL_DIVISION_BOUND:
            raise ResourceError(
                f"n = {n} exceeds the trial-division bound {TRIAL_DIVISION_BOUND}"
            )
        return Factorization(n, tuple(_trial_factors(n)))
    if n not in table:
        raise DomainError(f"{n} outside table range [{table.lo}, {table.hi}]")
    factors = []
    m = n
    while m > 1:
        if m not in table:
            last = factors[-1][0] if factors else 2
            factors.extend(_trial_factors(m, last + 1))
            break
        p = table[m]
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return Factorization(n, tuple(factors))


def sopfr(n: int, table: SpfTable | None = None) -> int:
    """Sum of prime factors of n counted with multiplicity (OEIS A001414)."""
    return factorize(n, table).sopfr()


def sopf(n: int, table: SpfTable | None = None) -> int:
    """Sum of the distinct prime factors of n (OEIS A008472)."""
    return factorize(n, table).sopf()


def _block(lo: int, hi: int, base: np.ndarray | None, distinct: bool) -> np.ndarray:
    size = hi - lo + 1
    if base is None:
        base = small_primes(isqrt(hi))
    acc = np.zeros(size, dtype=np.int64)
    removed = np.ones(size, dtype=np.int64)
    for p in base.tolist():
        if p * p > hi:
            break
        pk = p
        while pk <= hi:
            start = (-lo) % pk
            if start < size:
                if pk == p or not distinct:
                    acc[start::pk] += p
                removed[start::pk] *= p
            pk *= p
    # after removing all primes <= sqrt(hi) what is left is 1 or a single prime
    cof = np.arange(lo, hi + 1, dtype=np.int64) // removed
    acc += np.where(cof > 1, cof, 0)
    return acc


def sopfr_block(lo: int, hi: int, base: np.ndarray | None = None) -> np.ndarray:
    """sopfr(m) for every m in [lo, hi] as an int64 array.

    ``base`` must contain every prime <= isqrt(hi) when supplied.
    """
    return _block(lo, hi, base, distinct=False)


def sopf_block(lo: int, hi: int, base: np.ndarray | None = None) -> np.ndarray:
    """sopf(m) for every m in [lo, hi] as an int64 array."""
    return _block(lo, hi, base, distinct=True)


def sopfr_table_values(table: SpfTable) -> np.ndarray:
    """sopfr over a table starting at 1, following the spf chain vectorised."""
    if table.lo != 1:
        raise DomainError("chain evaluation needs a table starting at 1")
    rem = np.arange(1, table.hi + 1, dtype=np.int64)
    acc = np.zeros_like(rem)
    live = np.flatnonzero(rem > 1)
    while live.size:
        p = table.spf[rem[live] - 1]
        acc[live] += p
        rem[live] //= p
        live = live[rem[live] > 1]
    return acc
