"""
Statistic distributions
=======================

Right-to-left maxima, rises and descents over 132-avoiding Dumont
permutations, compared with the per-value slices of their generating
functions.
"""

from dumont import joint_distribution, statistic_gf

N = 10

for stat in ("rlm", "rises", "descents"):
    joint = joint_distribution(N, "dumont-first-132-avoiding", stat=stat)
    print(stat)
    for k in range(N + 1):
        slice_ = statistic_gf(stat, k, N).integers()
        row = [joint[(n, k)] for n in range(N + 1)]
        if any(row) or any(slice_):
            flag = "" if row == slice_ else "  <- differs"
            print(f"  k={k:2d} {row}{flag}")

# %%
# The descents slice follows (1+x)C(x^2 y). The corollary's prose version
# is off by a factor of x.
from dumont.catalog import formula

print(formula("descents-slice", N, k=2).integers())
print(formula("descents-prose-slice", N, k=2).integers())
