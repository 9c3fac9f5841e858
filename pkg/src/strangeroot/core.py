"""Alist chains and strange roots.

Starting from the pair <1, n>, each step replaces <i, y> (with y > i) by
<i+1, y'> where y' is the smallest integer with (i+1)*y' > i*(y+1).  The
chain ends at an equal pair <r, r>; r is the strange root of n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .arith import ceil_div, checked, require_int


class AlistPair(NamedTuple):
    index: int
    value: int

    def __str__(self) -> str:
        return f"<{self.index},{self.value}>"


@dataclass(frozen=True)
class AlistSequence:
    seed: int
    pairs: tuple[AlistPair, ...]

    @property
    def root(self) -> int:
        return self.pairs[-1].index

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(p.value for p in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[AlistPair]:
        return iter(self.pairs)

    def __str__(self) -> str:
        return " -> ".join(str(p) for p in self.pairs)


def alist_step(i: int, y: int) -> int:
    """Successor value for the pair <i, y>.

    y' = floor(i*(y+1) / (i+1)) + 1 is the unique integer with
    (i+1)*y' > i*(y+1) >= (i+1)*(y'-1).
    """
    require_int(i, "i", 1)
    require_int(y, "y", 1)
    if y <= i:
        raise ValueError(f"<{i},{y}> is terminal: no successor when y <= i")
    return checked(i * (y + 1), "i*(y+1)") // (i + 1) + 1


def alist(n: int) -> AlistSequence:
    require_int(n, "n", 1)
    i, y = 1, n
    pairs = [AlistPair(1, n)]
    while y > i:
        y = alist_step(i, y)
        i += 1
        pairs.append(AlistPair(i, y))
    # the chain always closes on an equal pair
    assert y == i, f"alist({n}) ended on <{i},{y}>"
    return AlistSequence(n, tuple(pairs))


def strange_root(n: int) -> int:
    require_int(n, "n", 1)
    i, y = 1, n
    while y > i:
        y = checked(i * (y + 1), "i*(y+1)") // (i + 1) + 1
        i += 1
    return i


def w_sequence(n: int) -> tuple[int, ...]:
    """Differences w_i = y_i - y_{i+1} + 1 along alist(n), for n >= 2."""
    require_int(n, "n", 2)
    ys = alist(n).values
    return tuple(a - b + 1 for a, b in zip(ys, ys[1:]))


def w_recurrence(n: int) -> tuple[int, ...]:
    """The same numbers from the ceiling recurrence alone, never forming y_i.

    w_i = ceil((n - 1 - (w_1 + ... + w_{i-1})) / (i + 1)), stopping once the
    running sum reaches n - 1.
    """
    require_int(n, "n", 2)
    out = []
    remaining = n - 1
    i = 1
    while remaining > 0:
        w = ceil_div(remaining, i + 1)
        out.append(w)
        remaining -= w
        i += 1
    return tuple(out)
