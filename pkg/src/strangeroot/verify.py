"""Cross-check suites behind `strangeroot verify`.

Every suite pairs two independent routes to the same numbers (or a route
and a brute-force oracle) and fails on the first mismatch.  "quick" keeps
each suite to a few seconds; "full" runs the bounds the library is
documented against.
"""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import alist, alist_step, strange_root, w_recurrence, w_sequence
from .correspondence import alist_to_board, board_to_alist, preimage_count, strange_root_census
from .fagan import cf, fagan_sequence, from_fagan, to_fagan
from .search import inverse_step, is_unique_root, scan_unique_roots, x_sequence
from .tchoukaillon import (
    Board,
    fagan_property,
    iter_tchouk_recursive,
    move_vector,
    move_vector_from_board,
    solve,
    t,
    t_table_by_scan,
    tchouk,
)

# Published tables.  The n = 12 move vector is printed as (6,2,2,1,1), which
# contradicts both the recurrence and the selection counts of the actual game.
FIG_STRANGE_ROOTS = (1, 2, 3, 3, 4, 4, 5, 5, 5, 5, 6, 6, 7, 7, 7, 7, 7, 7, 8, 8)
FIG_ALIST_VALUES = {
    1: (1,), 2: (2, 2), 3: (3, 3, 3), 4: (4, 3, 3), 5: (5, 4, 4, 4),
    6: (6, 4, 4, 4), 7: (7, 5, 5, 5, 5), 8: (8, 5, 5, 5, 5), 9: (9, 6, 5, 5, 5),
    10: (10, 6, 5, 5, 5), 11: (11, 7, 6, 6, 6, 6), 12: (12, 7, 6, 6, 6, 6),
    13: (13, 8, 7, 7, 7, 7, 7), 14: (14, 8, 7, 7, 7, 7, 7), 15: (15, 9, 7, 7, 7, 7, 7),
    16: (16, 9, 7, 7, 7, 7, 7), 17: (17, 10, 8, 7, 7, 7, 7), 18: (18, 10, 8, 7, 7, 7, 7),
    19: (19, 11, 9, 8, 8, 8, 8, 8), 20: (20, 11, 9, 8, 8, 8, 8, 8),
}
FIG_BOARDS = {
    0: (), 1: (1,), 2: (0, 2), 3: (1, 2), 4: (0, 1, 3), 5: (1, 1, 3),
    6: (0, 0, 2, 4), 7: (1, 0, 2, 4), 8: (0, 2, 2, 4), 9: (1, 2, 2, 4),
    10: (0, 1, 1, 3, 5), 11: (1, 1, 1, 3, 5), 12: (0, 0, 0, 2, 4, 6), 13: (1, 0, 0, 2, 4, 6),
}
FIG_MOVE_VECTORS = {
    1: (1,), 2: (1, 1), 3: (2, 1), 4: (2, 1, 1), 5: (3, 1, 1), 6: (3, 1, 1, 1),
    7: (4, 1, 1, 1), 8: (4, 2, 1, 1), 9: (5, 2, 1, 1), 10: (5, 2, 1, 1, 1),
    11: (6, 2, 1, 1, 1), 12: (6, 2, 2, 1, 1), 13: (7, 2, 1, 1, 1, 1),
}
MOVE_VECTOR_12 = (6, 2, 1, 1, 1, 1)
T_PREFIX = (1, 2, 4, 6, 10, 12, 18, 22, 30, 34, 42, 48, 58, 60)
CF_TABLE = {1: 2, 2: 3, 3: 4, 6: 6, 30: 14, 493080: 1760, 242650650: 39046}
UNIQUE_ROOTS = {
    2: (2,), 3: (3, 4), 4: (5, 6), 6: (11, 12), 14: (59, 60),
    1760: (986159, 986160), 39046: (485301299, 485301300),
}

NOTES = [
    "move vector n=12: computed (6,2,1,1,1,1) by recurrence, board formula and play; "
    "the published table entry (6,2,2,1,1) is a misprint",
]


class VerificationError(AssertionError):
    pass


def check(cond: bool, msg: str) -> None:
    if not cond:
        raise VerificationError(msg)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.seconds:.2f}s) {self.detail}"


# --- strange roots ---------------------------------------------------------

def vectorized_alist_check(n_max: int) -> np.ndarray:
    """Run every chain <1,n>, n <= n_max, in lock-step with numpy and check
    each step's sandwich inequality, weak decrease and lower bound.  Returns
    the array of strange roots indexed by n (entry 0 unused)."""
    roots = np.zeros(n_max + 1, dtype=np.int64)
    seeds = np.arange(1, n_max + 1, dtype=np.int64)
    roots[1] = 1
    idx = seeds[seeds > 1]
    y = idx.copy()
    i = 1
    while idx.size:
        lhs = i * (y + 1)
        nxt = lhs // (i + 1) + 1
        check(bool(np.all((i + 1) * nxt > lhs)), f"strict side fails at i={i}")
        check(bool(np.all(lhs >= (i + 1) * (nxt - 1))), f"weak side fails at i={i}")
        check(bool(np.all(nxt <= y)), f"values increase at i={i}")
        check(bool(np.all(nxt >= i + 1)), f"value below index at i={i + 1}")
        i += 1
        check(i <= n_max + 1, "a chain failed to terminate")
        done = nxt <= i
        check(bool(np.all(nxt[done] == i)), f"chain ended on an unequal pair at i={i}")
        roots[idx[done]] = i
        idx, y = idx[~done], nxt[~done]
    return roots


def suite_alist(n_max: int) -> str:
    roots = vectorized_alist_check(n_max)
    check(bool(np.all(np.diff(roots[1:]) >= 0)), "strange roots are not monotone")
    stride = max(1, n_max // 5000)
    for n in range(1, n_max + 1, stride):
        check(int(roots[n]) == strange_root(n), f"vectorized root differs at n={n}")
    return f"n<={n_max}, sr({n_max})={roots[n_max]}"


def suite_step_dominance(bound: int) -> str:
    for i in range(1, bound + 1):
        prev = None
        for y in range(i + 1, 10 * bound):
            cur = alist_step(i, y)
            check(prev is None or prev <= cur, f"alist_step({i}, .) decreases at y={y}")
            prev = cur
    return f"i<={bound}, y<{10 * bound}"


def suite_w_recurrence(n_max: int) -> str:
    for n in range(2, n_max + 1):
        w = w_sequence(n)
        check(w == w_recurrence(n), f"w-sequence differs from recurrence at n={n}")
        check(sum(w) == n - 1, f"w-sequence of {n} does not sum to n-1")
    return f"n<={n_max}"


def suite_golden(_: int) -> str:
    check(tuple(strange_root(n) for n in range(1, 21)) == FIG_STRANGE_ROOTS, "strange roots 1..20")
    for n, ys in FIG_ALIST_VALUES.items():
        check(alist(n).values == ys, f"alist({n})")
    for n, stones in FIG_BOARDS.items():
        check(tchouk(n).stones == stones, f"tchouk({n})")
    for n, mv in FIG_MOVE_VECTORS.items():
        want = MOVE_VECTOR_12 if n == 12 else mv
        check(move_vector(n).counts == want, f"move_vector({n})")
        if n == 12:
            check(solve(tchouk(12)).move_vector().counts == want, "play counts for n=12")
    check(tuple(t(k) for k in range(1, 15)) == T_PREFIX, "t(1..14)")
    for m, root in CF_TABLE.items():
        check(cf(m) == root, f"cf({m})")
    return "figures reproduced; " + NOTES[0]


# --- Fagan -----------------------------------------------------------------

def suite_fagan(m_max: int) -> str:
    for m in range(1, m_max + 1):
        fs = fagan_sequence(m)
        mapped = tuple(to_fagan(p) for p in alist(2 * m).pairs[1:])
        check(mapped == fs.pairs, f"Fagan chain of {m} differs from transformed alist({2 * m})")
        check(fs.root == strange_root(2 * m), f"cf({m}) != sr({2 * m})")
        for (i, a), (j, b) in zip(fs.pairs, fs.pairs[1:]):
            check(j * b != i * a, f"product equality in Fagan chain of {m} at i={i}")
        for p in fs.pairs:
            check(to_fagan(from_fagan(p)) == p, f"round trip fails on {p}")
    return f"m<={m_max}"


# --- Tchoukaillon ----------------------------------------------------------

def suite_tchouk(n_max: int) -> str:
    for n, b in zip(range(n_max + 1), iter_tchouk_recursive()):
        c = tchouk(n)
        check(c == b, f"explicit and recursive boards differ at n={n}")
        check(all(0 <= v <= i for i, v in enumerate(c.stones, start=1)), f"entry out of range in tchouk({n})")
        check(n == 0 or c.final == c.length, f"last entry of tchouk({n}) is not its index")
        check(c.total == n, f"tchouk({n}) holds {c.total} stones")
    return f"n<={n_max}"


def suite_solve(n_max: int) -> str:
    """Solve tchouk(n_max) once.  The strategy only looks at the current
    board, so the tail of that game starting at tchouk(n) is solve(tchouk(n));
    its selection counts must match move_vector(n) for every n."""
    trace = solve(tchouk(n_max))
    check(bool(trace) and trace.won, f"tchouk({n_max}) not solved")
    sel = trace.selections
    check(len(sel) == n_max, "one stone must reach the pit per play")
    counts: Counter = Counter()
    for played in range(1, n_max + 1):
        n = played
        counts[sel[n_max - played]] += 1
        before = trace.states[n_max - played - 1] if n_max - played else trace.start
        check(before == tchouk(n), f"game passes through a non-winning board at {n} stones")
        got = tuple(counts[i] for i in range(1, max(counts) + 1))
        check(got == move_vector(n).counts, f"play counts differ from move_vector({n})")
    for n in range(0, min(n_max, 200) + 1):
        tr = solve(tchouk(n))
        check(bool(tr) and tr.won, f"direct solve of tchouk({n}) failed")
    return f"n<={n_max}"


def suite_move_vectors(n_max: int) -> str:
    for n in range(1, n_max + 1):
        mv = move_vector(n)
        check(mv == move_vector_from_board(tchouk(n)), f"move vector formulas differ at n={n}")
        check(mv.total == n, f"move_vector({n}) does not sum to n")
    return f"n<={n_max}"


def suite_t(k_max: int) -> str:
    scanned = t_table_by_scan(k_max)
    for k in range(1, k_max + 1):
        check(t(k) == scanned[k - 1], f"t({k}) rounding vs scan")
    ratio = t(2000) * math.pi / 2000**2
    check(0.99 <= ratio <= 1.01, f"t(2000)*pi/2000^2 = {ratio}")
    return f"k<={k_max}, t(2000)*pi/2000^2 = {ratio:.5f}"


# --- correspondence ----------------------------------------------------------

def suite_bijection(n_max: int) -> str:
    for n in range(2, n_max + 1):
        a = alist(n)
        b = alist_to_board(a)
        check(b == tchouk(n - 1), f"alist_to_board(alist({n})) != tchouk({n - 1})")
        check(board_to_alist(b, n) == a, f"round trip fails at n={n}")
        check(w_sequence(n) == move_vector(n - 1).counts, f"w-sequence vs move vector at n={n}")
        check(a.root == 1 + b.length == 1 + b.final, f"length/final identity fails at n={n}")
    return f"2<=n<={n_max}"


def suite_counting(k_max: int) -> str:
    census = strange_root_census(k_max)
    total = 0
    for k in range(1, k_max + 1):
        total += census[k]
        check(total == t(k), f"t({k}) != #{{n : sr(n) <= {k}}}")
        if k >= 2:
            check(preimage_count(k) == census[k], f"preimage_count({k})")
    return f"k<={k_max}"


# --- inverse analysis ---------------------------------------------------------

def suite_inverse(n_max: int) -> str:
    for n in range(2, n_max + 1):
        pairs = alist(n).pairs
        for (i, u), (_, v) in zip(pairs, pairs[1:]):
            check(u in inverse_step(i, v), f"<{i},{u}> -> <{i + 1},{v}> missing from inverse_step")
    i_max, v_max = (50, 200) if n_max >= 5000 else (20, 100)
    for i in range(1, i_max + 1):
        for v in range(2, v_max + 1):
            pre = inverse_step(i, v)
            brute = {u for u in range(i + 1, 3 * v + 1) if alist_step(i, u) == v}
            check(pre == brute, f"inverse_step({i}, {v}) = {sorted(pre)}, brute force {sorted(brute)}")
    return f"soundness n<={n_max}, completeness i<={i_max}, v<={v_max}"


def suite_x_t(r_max: int) -> str:
    for r in range(2, r_max + 1):
        check(x_sequence(r).x1 == t(r), f"x_1 != t(r) at r={r}")
    return f"r<={r_max}"


def suite_predicate(r_max: int) -> str:
    census = strange_root_census(r_max)
    for r in range(2, r_max + 1):
        direct = census[r] <= 2
        check(is_unique_root(r) == direct, f"is_unique_root({r}) vs enumeration")
        check((t(r) - t(r - 1) <= 2) == direct, f"t-difference vs enumeration at r={r}")
    cf_counts = Counter(cf(m) for m in range(1, t(r_max) // 2 + 1))
    for r in range(2, r_max + 1):
        # r = 2 has a single preimage, so the bridge is stated for "at most two"
        check((census[r] <= 2) == (cf_counts[r] == 1), f"cf-uniqueness differs at r={r}")
    return f"r<={r_max}"


def suite_scan(r_max: int) -> str:
    found = dict(scan_unique_roots(r_max))
    expected = {r: p for r, p in UNIQUE_ROOTS.items() if r <= r_max}
    check(found == expected, f"scan found {found}")
    for r, pre in found.items():
        if r >= 3:
            n = pre[-1]
            check(fagan_property(tchouk(n - 1)), f"tchouk({n - 1}) lacks the Fagan property (r={r})")
    return f"r<={r_max}: {sorted(found)}"


SUITES: list[tuple[str, Callable[[int], str], int, int]] = [
    ("golden-tables", suite_golden, 0, 0),
    ("alist-chains", suite_alist, 200_000, 1_000_000),
    ("step-dominance", suite_step_dominance, 40, 150),
    ("w-recurrence", suite_w_recurrence, 10_000, 100_000),
    ("fagan-correspondence", suite_fagan, 2_000, 100_000),
    ("tchouk-constructions", suite_tchouk, 10_000, 100_000),
    ("winning-play", suite_solve, 1_000, 10_000),
    ("move-vector-formulas", suite_move_vectors, 10_000, 100_000),
    ("t-sequence", suite_t, 200, 500),
    ("bijection", suite_bijection, 2_000, 5_000),
    ("counting", suite_counting, 100, 300),
    ("inverse-step", suite_inverse, 2_000, 100_000),
    ("x-sequence-vs-t", suite_x_t, 1_000, 2_000),
    ("unique-root-predicate", suite_predicate, 100, 300),
    ("unique-root-scan", suite_scan, 2_000, 40_000),
]


def run_suite(name: str, fn: Callable[[int], str], bound: int) -> SuiteResult:
    start = time.perf_counter()
    try:
        detail = fn(bound)
        ok = True
    except VerificationError as exc:
        detail, ok = str(exc), False
    return SuiteResult(name, ok, detail, time.perf_counter() - start)


def run_verification(level: str = "quick", on_result: Callable[[SuiteResult], None] | None = None) -> list[SuiteResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    results = []
    for name, fn, quick, full in SUITES:
        res = run_suite(name, fn, quick if level == "quick" else full)
        results.append(res)
        if on_result is not None:
            on_result(res)
    return results
