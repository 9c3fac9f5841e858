"""How many r have exactly c integers with strange root r, for r <= R.

Counts come from t(r) - t(r-1); pass R as the only argument (default 5000).
"""

import sys
from collections import Counter

from strangeroot.tchoukaillon import t

R = int(sys.argv[1]) if len(sys.argv) > 1 else 5000
prev = t(1)
hist = Counter()
for r in range(2, R + 1):
    cur = t(r)
    hist[cur - prev] += 1
    prev = cur
for count in sorted(hist):
    print(f"{count:>5} {hist[count]:>6}")
