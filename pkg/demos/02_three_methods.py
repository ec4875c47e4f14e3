"""Three independent ways to compute B(x) = sum_{n<=x} sopfr(n).

* direct: evaluate sopfr on every n, one sieve segment at a time
* prime_contrib: each prime p contributes p * (x//p + x//p^2 + ...)
* sublinear: sum_n P(x // n) over a quotient table, plus a prime-power term
"""
from sopfr import Method, cross_check

for x in (10, 10**4, 10**6, 10**7):
    for target in ("B", "B_dist"):
        rep = cross_check(x, target=target)
        timings = ", ".join(f"{m.value} {t * 1e3:.1f} ms" for m, t in rep.timings.items())
        print(f"{target}({x}) = {rep.value}  agree={rep.all_equal}  [{timings}]")

# %% Beyond 10^9 only the quotient-table route is within budget.
rep = cross_check(10**10)
print("skipped:", {m.value: why.split(";")[0] for m, why in rep.skipped.items()})
print("B(10^10) =", rep.values[Method.SUBLINEAR])
