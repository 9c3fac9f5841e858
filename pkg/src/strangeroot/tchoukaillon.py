"""Tchoukaillon solitaire.

Holes are numbered 1, 2, ... to the right of the pit (hole 0).  Playing hole
i with s stones drops one stone in each of holes i-1, ..., i-s; a stone that
reaches hole 0 stays in the pit, and s > i loses at once.  The pit is never
stored in a board.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .arith import ceil_div, require_int


class IllegalMove(ValueError):
    """Selected hole is out of range or empty."""


@dataclass(frozen=True)
class Board:
    """Stone counts (c_1, ..., c_l) with trailing empty holes trimmed."""

    stones: tuple[int, ...] = ()

    def __post_init__(self):
        s = tuple(int(c) for c in self.stones)
        if any(c < 0 for c in s):
            raise ValueError(f"negative stone count in {s}")
        end = len(s)
        while end and s[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "stones", s[:end])

    @classmethod
    def parse(cls, text: str) -> "Board":
        """Read "0,1,1,3,5" (parentheses and spaces optional; "" is empty)."""
        body = text.strip().strip("()").strip()
        if not body:
            return cls(())
        try:
            return cls(tuple(int(part) for part in body.split(",")))
        except ValueError as exc:
            raise ValueError(f"cannot parse board {text!r}: {exc}") from None

    def hole(self, i: int) -> int:
        """Stones in hole i (1-indexed); holes past the end are empty."""
        if i < 1:
            raise IndexError(f"hole {i} is not a board hole")
        return self.stones[i - 1] if i <= len(self.stones) else 0

    @property
    def length(self) -> int:
        return len(self.stones)

    @property
    def final(self) -> int:
        return self.stones[-1] if self.stones else 0

    @property
    def total(self) -> int:
        return sum(self.stones)

    def csv(self) -> str:
        return ",".join(map(str, self.stones))

    def __str__(self) -> str:
        return "(" + self.csv() + ")"


@dataclass(frozen=True)
class Loss:
    """Outcome of a play that cannot lead to an empty board."""

    board: Board
    hole: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return "LOSS"


@dataclass(frozen=True)
class MoveVector:
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.counts)) + ")"


@dataclass(frozen=True)
class PlayTrace:
    start: Board
    selections: tuple[int, ...] = ()
    states: tuple[Board, ...] = field(default=(), repr=False)

    @property
    def final(self) -> Board:
        return self.states[-1] if self.states else self.start

    @property
    def won(self) -> bool:
        return self.final.total == 0

    def move_vector(self) -> MoveVector:
        """How many times each hole was selected."""
        counts = Counter(self.selections)
        top = max(counts, default=0)
        return MoveVector(tuple(counts[i] for i in range(1, top + 1)))


def _sow(stones: list[int], hole: int) -> None:
    # caller guarantees 1 <= s <= hole
    s = stones[hole - 1]
    stones[hole - 1] = 0
    for j in range(max(hole - s, 1), hole):
        stones[j - 1] += 1


def play_move(b: Board, hole: int, strict: bool = False):
    """Play one hole; returns the new Board, or Loss when it overshoots the pit.

    With strict=True the classical rule applies as well: a sowing whose last
    stone stops short of the pit also loses.  Only under that rule is the
    winning n-stone board unique; without it e.g. (1,1) clears via holes 1, 2, 1.
    """
    if not 1 <= hole <= b.length or b.hole(hole) == 0:
        raise IllegalMove(f"hole {hole} of {b} is empty or off the board")
    if b.hole(hole) > hole:
        return Loss(b, hole, f"hole {hole} holds {b.hole(hole)} stones, more than the holes before the pit")
    if strict and b.hole(hole) < hole:
        return Loss(b, hole, f"last stone from hole {hole} stops short of the pit")
    stones = list(b.stones)
    _sow(stones, hole)
    return Board(tuple(stones))


def tchouk(n: int) -> Board:
    """Winning n-stone board from the modular recurrence
    c_k = (n - (c_1 + ... + c_{k-1})) mod (k+1)."""
    require_int(n, "n", 0)
    out = []
    s = 0
    k = 1
    zero_run = 0
    while s < n:
        c = (n - s) % (k + 1)
        out.append(c)
        s += c
        zero_run = zero_run + 1 if c == 0 else 0
        # n - s divisible by every modulus over a zero run longer than k is impossible
        if zero_run > k:
            raise RuntimeError(f"tchouk({n}) stalled at hole {k} with partial sum {s}")
        k += 1
    return Board(tuple(out))


def _grow(stones: list[int]) -> None:
    """One stone-adding step: fill the leftmost empty hole i with i stones and
    take one stone from each of holes 1..i-1.  Mutates in place."""
    i = 1
    while i <= len(stones) and stones[i - 1] != 0:
        i += 1
    if i > len(stones):
        stones.append(0)
    stones[i - 1] = i
    for j in range(i - 1):
        stones[j] -= 1


def iter_tchouk_recursive() -> Iterator[Board]:
    """Tchouk_0, Tchouk_1, ... from the stone-adding recursion."""
    stones: list[int] = []
    while True:
        yield Board(tuple(stones))
        _grow(stones)


def tchouk_recursive(n: int) -> Board:
    require_int(n, "n", 0)
    stones: list[int] = []
    for _ in range(n):
        _grow(stones)
    return Board(tuple(stones))


def solve(b: Board):
    """Play the leftmost hole whose count equals its index until the board is
    empty.  Returns the PlayTrace of a win, or Loss once no such hole exists."""
    stones = list(b.stones)
    selections = []
    states = []
    remaining = b.total
    while remaining:
        for i, c in enumerate(stones, start=1):
            if c == i:
                break
        else:
            trace = PlayTrace(b, tuple(selections), tuple(states))
            return Loss(trace.final, None, f"no hole with count equal to its index after {len(selections)} plays")
        _sow(stones, i)
        remaining -= 1
        selections.append(i)
        states.append(Board(tuple(stones)))
    return PlayTrace(b, tuple(selections), tuple(states))


def move_vector(n: int) -> MoveVector:
    """m_k = ceil((n - (m_1 + ... + m_{k-1})) / (k+1)) until nothing remains."""
    require_int(n, "n", 1)
    out = []
    remaining = n
    k = 1
    while remaining > 0:
        m = ceil_div(remaining, k + 1)
        out.append(m)
        remaining -= m
        k += 1
    return MoveVector(tuple(out))


def move_vector_from_board(b: Board) -> MoveVector:
    """Move vector read off a winning board:
    i*(i+1)*m_i = (i+1)*b_i + (b_{i+1} + ... + b_l)."""
    c = b.stones
    out = [0] * len(c)
    tail = 0
    for i in range(len(c), 0, -1):
        num = (i + 1) * c[i - 1] + tail
        den = i * (i + 1)
        if num % den:
            raise ValueError(f"{b} is not a winning configuration: m_{i} = {num}/{den}")
        out[i - 1] = num // den
        if out[i - 1] < 1:
            raise ValueError(f"{b} is not a winning configuration: m_{i} = {out[i - 1]}")
        tail += c[i - 1]
    return MoveVector(tuple(out))


def move_vector_by_play(n: int) -> MoveVector:
    """Selection counts observed while solving tchouk(n)."""
    require_int(n, "n", 1)
    trace = solve(tchouk(n))
    if not trace:
        raise RuntimeError(f"tchouk({n}) was not solved")
    return trace.move_vector()


def t(k: int) -> int:
    """Start at k and round up to the next multiple of k-1, k-2, ..., 1
    (a value that is already a multiple stays put)."""
    require_int(k, "k", 1)
    v = k
    for j in range(k - 1, 0, -1):
        v += -v % j
    return v


def t_by_scan(k: int) -> int:
    """Least n such that tchouk(n) has a hole holding exactly k stones."""
    require_int(k, "k", 1)
    return t_table_by_scan(k)[-1]


def t_table_by_scan(k_max: int) -> list[int]:
    """[t(1), ..., t(k_max)] by walking the winning boards in order.

    Only holes 1..i change in a growth step, so a first occurrence can only
    happen there.
    """
    require_int(k_max, "k_max", 1)
    first = [0] * (k_max + 1)
    missing = k_max
    stones: list[int] = []
    n = 0
    while missing:
        i = 1
        while i <= len(stones) and stones[i - 1] != 0:
            i += 1
        _grow(stones)
        n += 1
        for c in stones[:i]:
            if 1 <= c <= k_max and not first[c]:
                first[c] = n
                missing -= 1
    return first[1:]


def t_ratio(k: int) -> float:
    """t(k) * pi / k^2, which tends to 1."""
    return t(k) * math.pi / (k * k)


def fagan_property(b: Board) -> bool:
    """b_1 = 1, b_k = k for the last hole k, and 1 <= b_i < i in between."""
    if not b.length:
        raise ValueError("fagan_property needs a non-empty board")
    c = b.stones
    k = len(c)
    if c[0] != 1 or c[-1] != k:
        return False
    return all(1 <= c[i - 1] < i for i in range(2, k))
