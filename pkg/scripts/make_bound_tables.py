#!/usr/bin/env python3
"""Export every bound rule as CSV and print the planar comparison.

Writes one `<rule>.csv` per rule into the output directory and prints,
per n, the three-way-split table value against the closed form h(n) and
the n*log_cbrt9(n) threshold it drops below from n=5 on.
"""

import argparse
from pathlib import Path

from boxpierce import BoundRule, bound_prop3, build_table, h, table_to_csv
from boxpierce.bounds import log_base_cbrt9


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=50)
    parser.add_argument("--max-d", type=int, default=4)
    parser.add_argument("--out-dir", type=Path, default=Path("bound_tables"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for rule in BoundRule:
        table = build_table(rule, args.max_n, args.max_d)
        path = args.out_dir / f"{rule.value}.csv"
        path.write_text(table_to_csv(table))
        print(f"wrote {path} ({len(table.values)} cells)")

    print(f"\n{'n':>4} {'table':>7} {'h(n)':>10} {'n*log(n)':>10}")
    for n in range(1, args.max_n + 1):
        threshold = n * log_base_cbrt9(n)
        marker = " <" if n >= 5 and bound_prop3(n) < threshold else ""
        print(f"{n:>4} {bound_prop3(n):>7} {h(n):>10.3f} {threshold:>10.3f}{marker}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
