"""
Truncated power series with exact coefficients
==============================================

TruncatedSeries holds Fractions up to a fixed degree. Division needs a
nonzero constant term; square roots need constant term 1.
"""

from dumont import TruncatedSeries, catalan_series, q_recurrence, sqrt_series
from dumont.series import q_summation

N = 12
x = TruncatedSeries.monomial(1, N)

geometric = 1 / (1 - x)
print(geometric.integers())

root = sqrt_series(1 - 4 * x)
print(root.integers())
print((root * root).integers())  # back to 1 - 4x

# Catalan numbers satisfy C = 1 + x C^2
c = catalan_series(N)
print(c.integers(), c == 1 + x * c * c)

# %%
# The continued-fraction family Q_r = 1 + x^2 Q_{r-1} / (1 - x^2 Q_{r-2}).
# F starts from Q_0 = 0, Q_1 = 1 and G from Q_0 = Q_1 = 1.
for r in range(2, 6):
    print("F", r, q_recurrence(r, "F", N).integers())
    print("G", r, q_recurrence(r, "G", N).integers())

# the closed sum form is computed separately and agrees
assert all(q_summation(r, k, 20) == q_recurrence(r, k, 20) for r in range(1, 7) for k in "FG")

# as r grows the coefficients settle on C(x^2)
print(q_recurrence(10, "F", N).integers())
print(c.scale_argument(2).integers())
