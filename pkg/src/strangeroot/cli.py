"""Command-line interface: ``strangeroot <subcommand> ...``.

Results go to standard output in table, jsonl or OEIS b-file form; logs,
progress checkpoints and errors go to standard error.  Exit status is 0 on
success, 1 on verification failure or overflow, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Iterable, Sequence

from .arith import RangeError
from .core import alist, strange_root
from .fagan import cf, fagan_sequence
from .search import inverse_step, root_preimages, scan_unique_roots, x_sequence
from .tchoukaillon import (
    Board,
    move_vector,
    move_vector_by_play,
    move_vector_from_board,
    solve,
    t,
    t_by_scan,
    t_table_by_scan,
    tchouk,
    tchouk_recursive,
)
from .verify import NOTES, run_verification

JOBS_ENV = "STRANGEROOT_JOBS"

log = logging.getLogger("strangeroot")


class UsageError(Exception):
    pass


# --- output helpers ------------------------------------------------------------

def bfile_lines(pairs: Iterable[tuple[int, int]]) -> list[str]:
    return [f"{i} {v}" for i, v in pairs]


def jsonl_lines(records: Iterable[dict]) -> list[str]:
    return [json.dumps(r, separators=(",", ":")) for r in records]


def grid_lines(rows: Sequence[Sequence[object]]) -> list[str]:
    """Rows of cells with every column right-aligned to its widest cell
    (the first column, holding labels, is left-aligned)."""
    cells = [[str(c) for c in row] for row in rows]
    ncol = max(len(r) for r in cells)
    for r in cells:
        r.extend([""] * (ncol - len(r)))
    widths = [max(len(r[j]) for r in cells) for j in range(ncol)]
    out = []
    for r in cells:
        parts = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        out.append(" ".join(parts).rstrip())
    return out


def series(fmt: str, key: str, label: str, pairs: list[tuple[int, int]]) -> list[str]:
    if fmt == "bfile":
        return bfile_lines(pairs)
    if fmt == "jsonl":
        return jsonl_lines({key: i, label: v} for i, v in pairs)
    return grid_lines([[key] + [i for i, _ in pairs], [f"{label}({key})"] + [v for _, v in pairs]])


def _span(args, single: str) -> range:
    if args.range is not None:
        a, b = args.range
        if a < 1 or b < a:
            raise UsageError(f"bad range {a} {b}")
        return range(a, b + 1)
    value = getattr(args, single)
    if value is None:
        raise UsageError(f"give {single.upper()} or --range A B")
    return range(value, value + 1)


# --- subcommands -------------------------------------------------------------

def cmd_sr(args) -> list[str]:
    return series(args.format, "n", "sr", [(n, strange_root(n)) for n in _span(args, "n")])


def cmd_cf(args) -> list[str]:
    return series(args.format, "m", "cf", [(m, cf(m)) for m in _span(args, "m")])


def cmd_t(args) -> list[str]:
    ks = _span(args, "k")
    if args.method == "scan":
        table = t_table_by_scan(ks[-1]) if len(ks) > 1 else None
        values = table[ks[0] - 1:] if table else [t_by_scan(ks[0])]
    else:
        values = [t(k) for k in ks]
    return series(args.format, "k", "t", list(zip(ks, values)))


def _chain(fmt: str, seed_key: str, seq, pair_fmt) -> list[str]:
    if fmt == "bfile":
        return bfile_lines(seq.pairs)
    if fmt == "jsonl":
        return jsonl_lines([{seed_key: seq.seed, "root": seq.root,
                             "pairs": [list(p) for p in seq.pairs]}])
    return [" -> ".join(pair_fmt(p) for p in seq.pairs)]


def cmd_alist(args) -> list[str]:
    return _chain(args.format, "n", alist(args.n), str)


def cmd_fagan_seq(args) -> list[str]:
    return _chain(args.format, "m", fagan_sequence(args.m), str)


def _vector(fmt: str, key: str, value: int, name: str, entries: tuple[int, ...]) -> list[str]:
    if fmt == "bfile":
        return bfile_lines(enumerate(entries, start=1))
    if fmt == "jsonl":
        return jsonl_lines([{key: value, name: list(entries)}])
    return ["(" + ",".join(map(str, entries)) + ")"]


def cmd_tchouk(args) -> list[str]:
    b = tchouk(args.n) if args.method == "explicit" else tchouk_recursive(args.n)
    return _vector(args.format, "n", args.n, "board", b.stones)


def cmd_movevec(args) -> list[str]:
    if args.method == "formula":
        mv = move_vector(args.n)
    elif args.method == "board":
        mv = move_vector_from_board(tchouk(args.n))
    else:
        mv = move_vector_by_play(args.n)
    return _vector(args.format, "n", args.n, "move_vector", mv.counts)


def cmd_solve(args) -> list[str]:
    board = Board.parse(args.board)
    result = solve(board)
    won = bool(result)
    if not won:
        log.info("%s cannot be won: %s", board, result.reason)
    if args.format == "jsonl":
        rec = {"board": list(board.stones), "won": won}
        if won:
            rec["selections"] = list(result.selections)
            rec["states"] = [list(s.stones) for s in result.states]
        else:
            rec["stuck_at"] = list(result.board.stones)
        return jsonl_lines([rec])
    if not won:
        return ["LOSS"]
    if args.format == "bfile":
        return bfile_lines(enumerate(result.selections, start=1))
    lines = [str(board)]
    lines += [f"hole {h} -> {s}" for h, s in zip(result.selections, result.states)]
    return lines


def cmd_inverse(args) -> list[str]:
    pre = sorted(inverse_step(args.i, args.v))
    if args.format == "bfile":
        return bfile_lines(enumerate(pre, start=1))
    if args.format == "jsonl":
        return jsonl_lines([{"i": args.i, "v": args.v, "predecessors": pre}])
    return [" ".join(map(str, pre))]


def cmd_xseq(args) -> list[str]:
    xs = x_sequence(args.r)
    r = xs.root
    if args.format == "bfile":
        return bfile_lines((i, xs.x(i)) for i in range(1, r + 1))
    if args.format == "jsonl":
        flags = {str(i): xs.divides(i) for i in range(2, r - 1)}
        return jsonl_lines([{"r": r, "values": list(xs.values), "divisible": flags}])
    idx = list(range(r, 0, -1))
    marks = ["*" if 2 <= i <= r - 2 and xs.divides(i) else ("." if 2 <= i <= r - 2 else "") for i in idx]
    return grid_lines([["i"] + idx, ["x_i"] + list(xs.values), ["i|x_{i+1}-1"] + marks])


def _preimage_json(pre):
    if isinstance(pre, range):
        return {"from": pre.start, "to": pre.stop - 1}
    return list(pre)


def _preimage_text(pre):
    if isinstance(pre, range):
        return f"{pre.start}..{pre.stop - 1}"
    return ",".join(map(str, pre))


def cmd_scan(args) -> list[str]:
    def progress(cp):
        print(json.dumps(cp.as_dict()), file=sys.stderr, flush=True)

    found = scan_unique_roots(
        args.rmax, jobs=args.jobs, mode=args.mode,
        progress=progress if args.progress_interval > 0 else None,
        progress_interval=args.progress_interval,
    )
    if args.all:
        unique = dict(found)
        rows = []
        for r in range(1, args.rmax + 1):
            pre = root_preimages(r, cap=args.preimage_cap)
            rows.append((r, len(pre), pre, r in unique))
        if args.format == "bfile":
            return bfile_lines((r, count) for r, count, _, _ in rows)
        if args.format == "jsonl":
            return jsonl_lines({"r": r, "count": c, "unique": u, "preimages": _preimage_json(p)}
                               for r, c, p, u in rows)
        return [f"{r} {c} {_preimage_text(p)}" + (" unique" if u else "") for r, c, p, u in rows]
    if args.format == "bfile":
        return bfile_lines((k, r) for k, (r, _) in enumerate(found, start=1))
    if args.format == "jsonl":
        return jsonl_lines({"r": r, "preimages": list(p)} for r, p in found)
    return [f"{r} {_preimage_text(p)}" for r, p in found]


def cmd_verify(args) -> list[str]:
    def show(res):
        # stream as suites finish; verify can take minutes at full level
        line = json.dumps(res.__dict__) if args.format == "jsonl" else res.line()
        args.stream.write(line + "\n")
        args.stream.flush()

    results = run_verification(args.level, on_result=show)
    failed = [r.name for r in results if not r.passed]
    tail = [f"note: {note}" for note in NOTES] if args.format != "jsonl" else []
    tail.append(f"{len(results) - len(failed)}/{len(results)} suites passed"
                if not failed else f"FAILED: {', '.join(failed)}")
    args.verify_failed = bool(failed)
    return tail


# --- parser ------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "jsonl", "bfile"), default="table")
    common.add_argument("--out", metavar="FILE", help="write results to FILE instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    p = argparse.ArgumentParser(prog="strangeroot", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("sr", cmd_sr, "strange roots")
    sp.add_argument("n", nargs="?", type=_positive)
    sp.add_argument("--range", nargs=2, type=_positive, metavar=("A", "B"))

    sp = add("alist", cmd_alist, "full Alist chain of N")
    sp.add_argument("n", type=_positive)

    sp = add("cf", cmd_cf, "terminal value of Fagan's construction")
    sp.add_argument("m", nargs="?", type=_positive)
    sp.add_argument("--range", nargs=2, type=_positive, metavar=("A", "B"))

    sp = add("fagan-seq", cmd_fagan_seq, "Fagan chain of M")
    sp.add_argument("m", type=_positive)

    sp = add("tchouk", cmd_tchouk, "winning Tchoukaillon board with N stones")
    sp.add_argument("n", type=_nonneg)
    sp.add_argument("--method", choices=("explicit", "recursive"), default="explicit")

    sp = add("movevec", cmd_movevec, "move vector of the winning N-stone board")
    sp.add_argument("n", type=_positive)
    sp.add_argument("--method", choices=("formula", "board", "play"), default="formula")

    sp = add("t", cmd_t, "least n whose winning board holds K in some hole (A002491)")
    sp.add_argument("k", nargs="?", type=_positive)
    sp.add_argument("--range", nargs=2, type=_positive, metavar=("A", "B"))
    sp.add_argument("--method", choices=("brown", "scan"), default="brown")

    sp = add("solve", cmd_solve, "play a board, e.g. \"0,1,1,3,5\"")
    sp.add_argument("board")

    sp = add("inverse", cmd_inverse, "all u with <I,u> -> <I+1,V>")
    sp.add_argument("i", type=_positive)
    sp.add_argument("v", type=_positive)

    sp = add("xseq", cmd_xseq, "backward chain x_R..x_1 with divisibility flags")
    sp.add_argument("r", type=_positive)

    sp = add("scan", cmd_scan, "strange roots of at most two integers, up to RMAX")
    sp.add_argument("rmax", type=_positive)
    sp.add_argument("--jobs", type=_positive, default=int(os.environ.get(JOBS_ENV, "1") or 1),
                    help=f"worker processes (default ${JOBS_ENV} or 1)")
    sp.add_argument("--mode", choices=("chain", "table"), default="chain")
    sp.add_argument("--preimage-cap", type=_nonneg, default=64,
                    help="with --all, preimage sets larger than this print as an interval")
    sp.add_argument("--all", action="store_true", help="report every r with its preimages")
    sp.add_argument("--progress-interval", type=float, default=10.0, metavar="SECONDS",
                    help="checkpoint interval on stderr; 0 disables")

    sp = add("verify", cmd_verify, "run the cross-check suites")
    sp.add_argument("--level", choices=("quick", "full"), default="quick")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    out = open(args.out, "w") if args.out else sys.stdout
    args.stream = out
    args.verify_failed = False
    try:
        try:
            lines = args.func(args)
        except (UsageError, ValueError, TypeError) as exc:
            print(f"strangeroot {args.command}: error: {exc}", file=sys.stderr)
            return 2
        except OverflowError as exc:
            kind = "range error" if isinstance(exc, RangeError) else "overflow"
            print(f"strangeroot {args.command}: {kind}: {exc}", file=sys.stderr)
            return 1
        out.write("".join(line + "\n" for line in lines))
        out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return 1 if args.verify_failed else 0


if __name__ == "__main__":
    sys.exit(main())
