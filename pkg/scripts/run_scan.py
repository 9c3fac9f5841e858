"""Scan for strange roots shared by at most two integers and time it.

    python scripts/run_scan.py 40000 --jobs 4 --out scan.jsonl
"""

import argparse
import json
import sys
import time

from strangeroot import scan_unique_roots


def main():
    p = argparse.ArgumentParser()
    p.add_argument("rmax", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--mode", choices=("chain", "table"), default="chain")
    p.add_argument("--out")
    args = p.parse_args()

    start = time.perf_counter()
    found = scan_unique_roots(
        args.rmax, jobs=args.jobs, mode=args.mode,
        progress=lambda cp: print(json.dumps(cp.as_dict()), file=sys.stderr, flush=True),
    )
    elapsed = time.perf_counter() - start

    lines = [json.dumps({"r": r, "preimages": list(p)}) for r, p in found]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        print("\n".join(lines))
    print(f"r_max={args.rmax} jobs={args.jobs} mode={args.mode} found={len(found)} "
          f"elapsed={elapsed:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
