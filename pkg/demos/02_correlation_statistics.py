"""
Pearson correlation with exact two-tailed significance
======================================================

Shows the statistics layer on hand-picked numbers: alignment with pairwise
deletion, the correlation coefficient, and the Student-t p-value evaluated
through the regularized incomplete beta function.
"""

from datetime import date, timedelta

from hashtag_mobility import (
    DailySeries,
    DateWindow,
    align,
    p_two_tailed,
    pearson_r,
    regularized_incomplete_beta,
)

start = date(2020, 3, 1)
window = DateWindow(start, start + timedelta(days=13))

# Two daily series with a gap each: alignment keeps only shared dates
# (pairwise deletion -- nothing is interpolated).
hashtags = DailySeries(
    "total", {start + timedelta(days=i): v for i, v in enumerate([3, 5, 8, 13, 20, 26, 31])}
)
mobility = DailySeries(
    "residential",
    {start + timedelta(days=i): v for i, v in [(0, 1.0), (1, 2.0), (3, 5.0), (4, 7.5), (5, 9.0), (6, 11.0), (9, 4.0)]},
)
pair = align(hashtags, mobility, window)
print(f"aligned n={pair.n} dates={[d.isoformat() for d in pair.dates]}")
print("x:", [float(v) for v in pair.x])
print("y:", [float(v) for v in pair.y])

r = pearson_r(pair)
p = p_two_tailed(r, pair.n)
print(f"\nr = {r:+.6f}, two-tailed p = {p:.6f} (n = {pair.n})")

# The p-value transform: with df = n - 2 the two-tailed tail mass equals
# I_x(df/2, 1/2) at x = 1 - r^2.
df = pair.n - 2
x = (1 - r) * (1 + r)
print(f"check: I_x(df/2, 1/2) at x = 1 - r^2 -> "
      f"{regularized_incomplete_beta(df / 2, 0.5, x):.6f}")

# Significance falls with both |r| and n.
print("\np for fixed n = 30 as |r| grows:")
for r_value in (0.1, 0.3, 0.5, 0.7, 0.9):
    print(f"  r = {r_value:.1f} -> p = {p_two_tailed(r_value, 30):.3e}")

print("\np for fixed r = 0.5 as n grows:")
for n in (5, 10, 20, 50, 100):
    print(f"  n = {n:3d} -> p = {p_two_tailed(0.5, n):.3e}")
