"""Pointwise values of sopfr and sopf.

Run with ``python demos/01_pointwise.py``.
"""
from sopfr import build_spf_table, factorize, sopf, sopfr

# %% Primes are the fixed points: sopfr(p) = p.
for p in (2, 8191, 10**9 + 7, 10**9 + 9):
    print(f"sopfr({p}) = {sopfr(p)}")

# %% Next to a Mersenne prime the value collapses: 2^13 has sopfr = 2 * 13.
print(f"sopfr(2^13 - 1) = {sopfr(2**13 - 1)},  sopfr(2^13) = {sopfr(2**13)}")

# %% A composite neighbour of 10^9 + 7.
f = factorize(10**9 + 8)
print(f"10^9 + 8 = {f}")
print(f"  sopfr = {f.sopfr()}  (with multiplicity)")
print(f"  sopf  = {f.sopf()}  (distinct primes)")

# %% Complete additivity, checked on a few products.
for m, n in [(12, 18), (97, 97), (1024, 3**7)]:
    print(f"sopfr({m}*{n}) = {sopfr(m * n)} = {sopfr(m)} + {sopfr(n)}")

# %% Bulk evaluation goes through a smallest-prime-factor table.
table = build_spf_table(10**9, 10**9 + 20)
for n in range(10**9, 10**9 + 21):
    print(n, factorize(n, table))
