"""Bijection between Alist chains of n and winning boards of n - 1 stones,
and the preimage counts it implies."""

from __future__ import annotations

from collections import Counter

from .arith import require_int
from .core import AlistPair, AlistSequence, strange_root
from .tchoukaillon import Board, t


def alist_to_board(a: AlistSequence) -> Board:
    """b_i = 2i + 1 + i*y_i - (i+1)*y_{i+1} for i = 1 .. sr(n) - 1."""
    if a.seed < 2:
        raise ValueError("alist_to_board needs a seed n >= 2")
    ys = a.values
    return Board(tuple(
        2 * i + 1 + i * ys[i - 1] - (i + 1) * ys[i]
        for i in range(1, len(ys))
    ))


def board_to_alist(b: Board, n: int) -> AlistSequence:
    """Rebuild alist(n) from tchouk(n - 1) via y_i = i + (b_i + ... + b_l) / i."""
    require_int(n, "n", 2)
    c = b.stones
    r = len(c) + 1
    suffix = [0] * (r + 1)
    for i in range(r - 1, 0, -1):
        suffix[i] = suffix[i + 1] + c[i - 1]
    pairs = []
    for i in range(1, r + 1):
        q, rem = divmod(suffix[i], i)
        if rem:
            raise ValueError(f"{b} is not the winning board of {n - 1} stones: y_{i} is not integral")
        pairs.append(AlistPair(i, i + q))
    if pairs[0].value != n:
        raise ValueError(f"{b} rebuilds a chain seeded at {pairs[0].value}, not {n}")
    return AlistSequence(n, tuple(pairs))


def board_to_alist_inferred(b: Board) -> AlistSequence:
    return board_to_alist(b, b.total + 1)


def preimage_count(k: int) -> int:
    """Number of n with strange_root(n) == k, as t(k) - t(k-1)."""
    require_int(k, "k", 2)
    return t(k) - t(k - 1)


def strange_root_census(k_max: int) -> Counter:
    """Count n by strange root, for every root <= k_max, by direct evaluation.

    Roots never decrease with n, so the walk stops at the first n whose
    root exceeds k_max.
    """
    require_int(k_max, "k_max", 1)
    census: Counter = Counter()
    n = 1
    while True:
        r = strange_root(n)
        if r > k_max:
            return census
        census[r] += 1
        n += 1
