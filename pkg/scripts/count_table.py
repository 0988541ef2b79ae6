#!/usr/bin/env python3
"""Print the count comparison table as CSV.

For each n the enumerated Schmidt count, the enumerated two-color count,
and the series coefficient are listed side by side.  Enumeration cost
grows quickly; --max-n 30 takes a couple of minutes.
"""

import argparse

from schmidt.partitions import count_schmidt, count_two_color
from schmidt.series import two_color_coefficients


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=20)
    args = parser.parse_args()
    if args.max_n < 1:
        parser.error("--max-n must be positive")

    coefficients = two_color_coefficients(args.max_n)
    print("n,schmidt,two_color,series,agree")
    for n in range(1, args.max_n + 1):
        s = count_schmidt(n)
        t = count_two_color(n)
        c = coefficients[n]
        agree = "true" if s == t == c else "false"
        print(f"{n},{s},{t},{c},{agree}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
