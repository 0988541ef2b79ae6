#!/usr/bin/env python3
"""Scan the refinement grid and summarize the two Schmidt-side readings.

For every cell the transported count (preimage statistics under the
inverse map) must equal the refined two-color count.  The fixed-length
vector reading is recorded as data; this script reports how often it
happens to agree and lists the smallest cells where it does not.
"""

import argparse

from schmidt.harness import refined_csv, refined_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--max-r", type=int, default=3)
    parser.add_argument("--max-l", type=int, default=3)
    parser.add_argument("--max-p", type=int, default=3)
    parser.add_argument("--max-q", type=int, default=3)
    parser.add_argument("--csv", action="store_true", help="dump the full grid as CSV")
    args = parser.parse_args()

    report = refined_report(args.max_n, args.max_r, args.max_l, args.max_p, args.max_q)
    if args.csv:
        print(refined_csv(report))
        return 0 if report.ok else 1

    rows = report.records
    literal_hits = [r for r in rows if r.literal_match]
    misses = [r for r in rows if not r.literal_match]
    print(f"grid cells: {len(rows)}")
    print(f"transported matches: {sum(1 for r in rows if r.transported_match)}")
    print(f"literal matches: {len(literal_hits)}")
    for r in misses[:10]:
        print(
            f"  literal off at n={r.n} r={r.r} l={r.l} p={r.p} q={r.q}:"
            f" refined={r.t_refined} literal={r.s_literal}"
        )
    if len(misses) > 10:
        print(f"  ... and {len(misses) - 10} more")
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
