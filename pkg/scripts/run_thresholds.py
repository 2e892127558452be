#!/usr/bin/env python3
"""Sweep least-n thresholds for the connectivity partition relations.

For each requested mode this scans target sizes m and reports the least
vertex count n at which every coloring (one representative per
color-permutation orbit) satisfies the relation, together with the
extremal coloring one step below.

Examples:
    python3 scripts/run_thresholds.py --colors 2 --palette-size 1 --max-m 3 --max-n 6
    python3 scripts/run_thresholds.py --modes wc --colors 2 --palette-size 2 --max-m 4 --max-n 7
"""

import argparse
import json
import sys
import time

from connramsey import ramsey_number, write_coloring


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--modes", nargs="+", default=["classical", "hc", "wc"],
                        choices=["classical", "hc", "wc"])
    parser.add_argument("--colors", type=int, default=2)
    parser.add_argument("--palette-size", type=int, default=1)
    parser.add_argument("--min-m", type=int, default=2)
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--time-limit", type=float, default=None)
    parser.add_argument("--show-extremal", action="store_true")
    args = parser.parse_args()

    rows = []
    for mode in args.modes:
        for m in range(args.min_m, args.max_m + 1):
            start = time.perf_counter()
            result = ramsey_number(
                mode, m, args.colors, args.palette_size, args.max_n,
                j=m if mode == "hc" else None,
                time_limit=args.time_limit,
            )
            elapsed = time.perf_counter() - start
            row = {
                "mode": mode,
                "m": m,
                "colors": args.colors,
                "palette_size": args.palette_size,
                "threshold": result.threshold,
                "seconds": round(elapsed, 2),
            }
            if args.show_extremal:
                row["extremal"] = write_coloring(result.extremal)
            rows.append(row)
            print(json.dumps(row, sort_keys=True))
    found = [r["threshold"] for r in rows if r["threshold"] is not None]
    print(f"# {len(found)}/{len(rows)} thresholds found within max_n={args.max_n}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
