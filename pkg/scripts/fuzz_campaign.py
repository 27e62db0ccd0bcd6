#!/usr/bin/env python3
"""Long-running fuzz campaign over random instances.

Every trial is checked for algorithm soundness, guarantee compliance,
and the exact-piercing lower bound; any violation count above zero is a
bug. Summary statistics go to stdout as JSON.
"""

import argparse
import json
import sys
import time

from boxpierce.bench import run_bench


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--boxes", type=int, default=12)
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--range", type=int, nargs=2, default=(0, 20), metavar=("LO", "HI"))
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    start = time.perf_counter()
    stats = run_bench(trials=args.trials, seed=args.seed, max_boxes=args.boxes,
                      dim=args.dim, coord_range=tuple(args.range), jobs=args.jobs)
    stats["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    json.dump(stats, sys.stdout, indent=2, sort_keys=True)
    print()
    if stats["violations"]:
        print(f"FAIL: {stats['violations']} violations", file=sys.stderr)
        return 1
    print(f"OK: {stats['trials']} trials clean in {stats['elapsed_seconds']}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
