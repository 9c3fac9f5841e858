"""Working backwards from a strange root.

A pair <i+1, v> has one or two possible predecessors <i, u>.  Following the
larger predecessor from <r, r> all the way down gives x_r, ..., x_1, and r is
the root of at most two integers exactly when no step below the top offers a
second predecessor.  The scan applies that test to every r up to a bound.
"""

from __future__ import annotations

import logging
import multiprocessing
import time
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .arith import INT64_MAX, RangeError, require_int
from .core import strange_root
from .tchoukaillon import t

log = logging.getLogger(__name__)

# x_1 grows like r^2/pi; below 2^31 every chain value fits comfortably in int64
SAFE_R_MAX = 2**31 - 1

Preimages = Union[tuple, range]


def inverse_step(i: int, v: int) -> frozenset[int]:
    """All u with <i, u> -> <i+1, v>.

    Candidates are v-1+floor((v-1)/i), plus v-2+(v-1)/i when i divides v-1.
    A candidate u <= i is a terminal pair with no successor and is dropped;
    that happens for the smaller candidate when v = i+1.
    """
    require_int(i, "i", 1)
    require_int(v, "v", 2)
    q, rem = divmod(v - 1, i)
    cands = (v - 2 + q, v - 1 + q) if rem == 0 else (v - 1 + q,)
    return frozenset(u for u in cands if u > i)


@dataclass(frozen=True)
class XSequence:
    root: int
    values: tuple[int, ...]           # x_r, x_{r-1}, ..., x_1
    divisibility_flags: tuple[bool, ...]  # entry j is for i = j + 2, i in 2..r-2

    def x(self, i: int) -> int:
        return self.values[self.root - i]

    @property
    def x1(self) -> int:
        return self.values[-1]

    def divides(self, i: int) -> bool:
        """Whether i divides x_{i+1} - 1, for 2 <= i <= r - 2."""
        if not 2 <= i <= self.root - 2:
            raise IndexError(f"no flag for i={i} when r={self.root}")
        return self.divisibility_flags[i - 2]


def x_sequence(r: int) -> XSequence:
    require_int(r, "r", 2)
    x = r
    values = [x]
    flags = [False] * max(r - 3, 0)
    for i in range(r - 1, 0, -1):
        q, rem = divmod(x - 1, i)
        if 2 <= i <= r - 2:
            flags[i - 2] = rem == 0
        x = x - 1 + q
        if x > INT64_MAX:
            raise RangeError(f"x-sequence of r={r} overflows 64 bits at i={i}")
        values.append(x)
    return XSequence(r, tuple(values), tuple(flags))


def _enumerate_preimages(r: int) -> tuple[int, ...]:
    # only used for tiny r; roots are monotone in n so the walk can stop early
    out = []
    n = 1
    while True:
        s = strange_root(n)
        if s > r:
            return tuple(out)
        if s == r:
            out.append(n)
        n += 1


def is_unique_root(r: int) -> bool:
    """True when at most two integers have strange root r."""
    require_int(r, "r", 2)
    if r < 5:
        return len(_enumerate_preimages(r)) <= 2
    return not any(x_sequence(r).divisibility_flags)


def root_preimages(r: int, cap: int = 64) -> Preimages:
    """Every n with strange_root(n) == r.

    Returned as a tuple, or as a range when there are more than cap of them;
    the set is always the interval (t(r-1), t(r)].
    """
    require_int(r, "r", 1)
    lo = t(r - 1) + 1 if r > 1 else 1
    hi = t(r)
    span = range(lo, hi + 1)
    return span if len(span) > cap else tuple(span)


def _unique_in(lo: int, hi: int) -> list[int]:
    """r in [lo, hi), r >= 5, passing the non-divisibility test.

    For i > (r-1)/2 the chain sits at x = r and (r-1) mod i != 0 unless
    i = r-1, so those steps are skipped; the first divisible step rejects r.
    """
    hits = []
    for r in range(max(lo, 5), hi):
        x = r
        for i in range((r - 1) // 2, 1, -1):
            q, rem = divmod(x - 1, i)
            if not rem:
                break
            x = x - 1 + q
        else:
            hits.append(r)
    return hits


def _pool_unique_in(bounds: tuple[int, int]) -> list[int]:
    return _unique_in(*bounds)


@dataclass(frozen=True)
class Checkpoint:
    r_reached: int
    found: int
    elapsed: float

    def as_dict(self) -> dict:
        return {"checkpoint": True, "r": self.r_reached, "found": self.found,
                "elapsed": round(self.elapsed, 3)}


def _chunks(lo: int, hi: int, size: int):
    for a in range(lo, hi, size):
        yield a, min(a + size, hi)


def scan_unique_roots(
    r_max: int,
    jobs: int = 1,
    mode: str = "chain",
    progress: Optional[Callable[[Checkpoint], None]] = None,
    progress_interval: float = 5.0,
    chunk: int = 256,
) -> list[tuple[int, tuple[int, ...]]]:
    """All r <= r_max that are the strange root of at most two integers,
    ascending, each with its preimages.

    mode "chain" tests each r on its own backward chain and spreads r-ranges
    over `jobs` worker processes; mode "table" is single-threaded and checks
    t(r) - t(r-1) <= 2 on successive t values.  Output is the same either way.
    """
    require_int(r_max, "r_max", 2)
    if r_max > SAFE_R_MAX:
        raise RangeError(f"r_max={r_max} is beyond the 64-bit-safe bound {SAFE_R_MAX}")
    if mode not in ("chain", "table"):
        raise ValueError(f"unknown scan mode {mode!r}")

    start = time.monotonic()
    last = start
    results: list[tuple[int, tuple[int, ...]]] = []

    def report(r_reached: int) -> None:
        nonlocal last
        now = time.monotonic()
        if progress is not None and now - last >= progress_interval:
            progress(Checkpoint(r_reached, len(results), now - start))
            last = now

    for r in range(2, min(r_max, 4) + 1):
        pre = _enumerate_preimages(r)
        if len(pre) <= 2:
            results.append((r, pre))

    if mode == "table":
        prev = t(4)
        for r in range(5, r_max + 1):
            cur = t(r)
            if cur - prev <= 2:
                results.append((r, tuple(range(prev + 1, cur + 1))))
            prev = cur
            report(r)
    else:
        chunks = list(_chunks(5, r_max + 1, chunk))
        if jobs > 1 and len(chunks) > 1:
            with multiprocessing.Pool(jobs) as pool:
                hit_lists = pool.imap(_pool_unique_in, chunks)
                for (_, b), hits in zip(chunks, hit_lists):
                    results.extend(_with_preimages(hits))
                    report(b - 1)
        else:
            for a, b in chunks:
                results.extend(_with_preimages(_unique_in(a, b)))
                report(b - 1)

    if progress is not None:
        progress(Checkpoint(r_max, len(results), time.monotonic() - start))
    log.debug("scan to %d found %d roots", r_max, len(results))
    return results


def _with_preimages(hits: list[int]):
    for r in hits:
        xs = x_sequence(r)
        # the fast kernel and the full chain must agree
        if any(xs.divisibility_flags):
            raise RuntimeError(f"scan kernel accepted r={r} but its chain has a divisible step")
        yield r, (xs.x1 - 1, xs.x1)
