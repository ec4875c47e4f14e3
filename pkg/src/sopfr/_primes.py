"""Small sieve helpers shared by the table builders and segment drivers."""
from functools import lru_cache
from math import isqrt

import numpy as np


@lru_cache(maxsize=8)
def small_primes(limit: int) -> np.ndarray:
    """All primes <= limit as a read-only int64 array (plain odd-only sieve)."""
    if limit < 2:
        out = np.zeros(0, dtype=np.int64)
    else:
        # index i stands for 2*i + 1
        odd = np.ones((limit + 1) // 2, dtype=bool)
        odd[0] = False
        for i in range(1, (isqrt(limit) - 1) // 2 + 1):
            if odd[i]:
                p = 2 * i + 1
                odd[p * p // 2 :: p] = False
        out = np.concatenate(([2], 2 * np.flatnonzero(odd) + 1)).astype(np.int64)
    out.flags.writeable = False
    return out


def primes_in_window(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi] given ``base`` containing every prime <= isqrt(hi)."""
    lo = max(lo, 2)
    if lo > hi:
        return np.zeros(0, dtype=np.int64)
    # odd candidates lo_odd, lo_odd + 2, ...
    lo_odd = lo | 1
    count = (hi - lo_odd) // 2 + 1 if hi >= lo_odd else 0
    mask = np.ones(count, dtype=bool)
    for p in base.tolist():
        if p == 2:
            continue
        pp = p * p
        if pp > hi:
            break
        start = max(pp, -(-lo_odd // p) * p)
        if start % 2 == 0:
            start += p
        if start <= hi:
            mask[(start - lo_odd) // 2 :: p] = False
    out = lo_odd + 2 * np.flatnonzero(mask).astype(np.int64)
    if lo == 2:
        out = np.concatenate((np.array([2], dtype=np.int64), out))
    return out
