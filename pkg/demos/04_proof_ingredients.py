"""Numerical checks of the auxiliary sums behind the growth law.

* sum_{p<=x} 1/p - log log x settles near 0.2615
* sum_{p<=x} 1/(p(p-1)) converges (so higher prime powers only add O(x))
* sum_{n<=x/2} 1 / (n^2 log^k(x/n)) behaves like (pi^2/6) / log^k x
"""
import math

from sopfr.asymptotics import ZETA2, basel_log_sum, mertens_table

for row in mertens_table([10**k for k in range(2, 9)]):
    print(f"x={row.x:>10}  sum 1/p - loglog x = {row.difference:.6f}"
          f"   sum 1/(p(p-1)) = {row.sum_1_over_p_p_minus_1:.9f}")

print()
for k in range(3, 8):
    x = 10**k
    L = math.log(x)
    s1, s2 = basel_log_sum(x, 1), basel_log_sum(x, 2)
    print(f"x=1e{k}:  S1*log x = {s1 * L:.5f}   S2*log^2 x = {s2 * L * L:.5f}"
          f"   (both -> {ZETA2:.5f})")
