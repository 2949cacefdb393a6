"""Histogram of th over all 4^C(n,2) digraphs on n vertices, for each n up to NMAX.

    python scripts/census_stats.py --nmax 5
"""
import argparse
import json
import time

from zfthrottle.closed_form import floor_2sqrt
from zfthrottle.verifier import census_distribution


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="print the raw distributions")
    args = ap.parse_args()

    rows = []
    for n in range(1, args.nmax + 1):
        start = time.perf_counter()
        d = census_distribution(n)
        rows.append(d)
        if args.json:
            continue
        hist = {int(k): v for k, v in d["distribution"].items()}
        mean = sum(k * v for k, v in hist.items()) / d["total"]
        print(f"n={n}  digraphs {d['total']:>8d}  lower bound {floor_2sqrt(n)}  mean th {mean:.3f}  "
              f"{dict(sorted(hist.items()))}  ({time.perf_counter() - start:.1f}s)")
    if args.json:
        print(json.dumps(rows, indent=1))


if __name__ == "__main__":
    main()
