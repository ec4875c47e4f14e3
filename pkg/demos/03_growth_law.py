"""How B(x) approaches (pi^2/12) x^2 / log x.

The ratio tends to 1 only like 1 + c / log x, so on a desk machine the
useful signal is the trend, and the scaled error (ratio - 1) log x, which
should settle to a constant.
"""
from sopfr.asymptotics import ZETA2, corollary_ratio, ratio_table

xs = [10**k for k in range(3, 12)]

print(f"{'x':>14} {'B(x)':>26} {'ratio':>10} {'(ratio-1)log x':>15}")
for row in ratio_table(xs, "B"):
    print(f"{row.x:>14} {row.exact:>26} {row.ratio:>10.6f} {row.scaled_error:>15.6f}")

# %% The same comparison for the sum of primes itself.
print()
for row in ratio_table(xs, "P"):
    print(f"P({row.x}) / (x^2 / 2 log x) = {row.ratio:.6f}")

# %% B(x) / P(x) drifts down towards zeta(2) = pi^2/6.
print()
for x in xs:
    r = corollary_ratio(x)
    print(f"B/P at {x:>14}: {r:.6f}   gap to pi^2/6: {r - ZETA2:+.6f}")
