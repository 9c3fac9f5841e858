"""Print t(k) * pi / k^2 for a spread of k, showing the approach to 1."""

import sys

from strangeroot.tchoukaillon import t, t_ratio

ks = [int(a) for a in sys.argv[1:]] or [10, 50, 100, 500, 1000, 2000, 5000, 10000]
print(f"{'k':>6} {'t(k)':>12} {'t(k)*pi/k^2':>12}")
for k in ks:
    print(f"{k:>6} {t(k):>12} {t_ratio(k):>12.6f}")
