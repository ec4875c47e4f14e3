import math
from math import isqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from sopfr import DomainError, ResourceError
from sopfr.prime_sums import (
    _M31,
    _recurrence,
    mertens_sum,
    prime_count,
    prime_count_table,
    prime_sum_direct,
    prime_sum_table,
)


@pytest.fixture(scope="module")
def prefix(is_prime_1e6):
    """P(v) and pi(v) for v <= 10**6 from an independent sieve."""
    n = np.arange(10**6 + 1)
    return np.cumsum(np.where(is_prime_1e6, n, 0)), np.cumsum(is_prime_1e6)


def test_prime_sum_direct_examples():
    assert prime_sum_direct(10) == 17
    assert prime_sum_direct(1) == 0
    assert prime_sum_direct(0) == 0
    assert prime_sum_direct(10**6) == prime_sum_table(10**6)[10**6]


def test_prime_sum_direct_budget():
    with pytest.raises(ResourceError, match="prime_sum_table"):
        prime_sum_direct(10**5, budget=10**4)


def test_table_x10():
    t = prime_sum_table(10)
    assert dict(t.items()) == {1: 0, 2: 2, 3: 5, 5: 10, 10: 17}
    assert [oracles.P(v) for v in (10, 5, 3, 2, 1)] == [17, 10, 5, 2, 0]


def test_table_x1():
    t = prime_sum_table(1)
    assert list(t.items()) == [(1, 0)]


def test_table_1e7_matches_direct():
    assert prime_sum_table(10**7)[10**7] == prime_sum_direct(10**7)


def test_prime_count_examples():
    assert prime_count(10) == 4
    assert prime_count(10**6) == 78498
    assert prime_count(0) == 0
    assert prime_count(1) == 0


def test_table_rejects_nonkey():
    t = prime_sum_table(100)
    assert 33 in t and 34 not in t
    with pytest.raises(KeyError):
        t[34]


@given(st.integers(1, 10**6))
def test_key_invariants(x):
    t = prime_sum_table(x)
    keys = t.keys()
    r = isqrt(x)
    assert len(keys) == len(t) == r + x // (r + 1)
    assert np.all(np.diff(keys) > 0)
    assert np.array_equal(x // (x // keys), keys)
    # every quotient x // n is a key
    ns = np.unique(np.linspace(1, x, 200).astype(np.int64))
    assert set((x // ns).tolist()) <= set(keys.tolist())


@pytest.mark.slow
def test_oracle_equivalence_full_sweep(prefix):
    psum, _ = prefix
    for x in range(1, 10**5 + 1):
        t = prime_sum_table(x)
        vals = np.concatenate((t.small[1:], t.large[1:][::-1])).astype(np.int64)
        assert np.array_equal(vals, psum[t.keys()]), x


@pytest.mark.slow
def test_prime_count_consistency_full_sweep(prefix):
    _, pcnt = prefix
    for x in range(1, 10**5 + 1):
        t = prime_count_table(x)
        vals = np.concatenate((t.small[1:], t.large[1:][::-1])).astype(np.int64)
        assert np.array_equal(vals, pcnt[t.keys()]), x


@pytest.mark.parametrize("x", [10**6, 10**7])
def test_oracle_equivalence_spot_keys(x, prefix):
    psum, _ = prefix
    t = prime_sum_table(x)
    for v in t.keys().tolist():
        if v <= 10**6:
            assert t[v] == psum[v]
    for v in [x, x // 2, x // 3, x // 7, x // 99]:
        assert t[v] == prime_sum_direct(v)


def test_crt_pass_agrees_with_direct_residues(prefix):
    psum, _ = prefix
    x = 10**6
    small, large = _recurrence(x, True, _M31)
    t = prime_sum_table(x)
    keys = t.keys()
    resid = np.concatenate((small[1:], large[1:][::-1]))
    assert np.array_equal(resid, psum[keys] % _M31)


def test_values_beyond_64_bits():
    # P(3e10) exceeds 2**64, forcing the CRT reconstruction
    x = 3 * 10**10
    v = prime_sum_table(x)[x]
    assert v > 1 << 64
    # the value must agree with a direct sieve of the top window plus the
    # table value just below it
    lo = x - 10**6
    t_lo = prime_sum_table(lo)[lo]
    from sopfr._primes import primes_in_window, small_primes

    window = primes_in_window(lo + 1, x, small_primes(isqrt(x)))
    assert v == t_lo + int(window.sum())


def test_known_prime_sums_by_decade():
    # sums of primes below powers of ten (OEIS A046731)
    known = [17, 1060, 76127, 5736396, 454396537, 37550402023, 3203324994356,
             279209790387276, 24739512092254535, 2220822432581729238,
             201467077743744681014]
    for k, v in enumerate(known, start=1):
        assert prime_sum_table(10**k)[10**k] == v


def test_mertens_x10():
    s = mertens_sum(10)
    assert s.reciprocal == pytest.approx(1 / 2 + 1 / 3 + 1 / 5 + 1 / 7, abs=1e-15)
    assert s.reciprocal == pytest.approx(1.17619, abs=1e-5)
    assert s.reciprocal_p_pm1 == pytest.approx(1 / 2 + 1 / 6 + 1 / 20 + 1 / 42, abs=1e-15)


def test_mertens_rejects_small_x():
    with pytest.raises(DomainError):
        mertens_sum(1)


def test_mertens_segment_independent():
    a = mertens_sum(10**6, segment_size=1 << 12)
    b = mertens_sum(10**6, segment_size=1 << 20)
    assert a == b


def test_mertens_tail_between_bounds():
    s = mertens_sum(10**7)
    assert 0.77 < s.reciprocal_p_pm1 < 0.78
    assert s.reciprocal - math.log(math.log(10**7)) == pytest.approx(0.26150, abs=1e-3)
