"""Orientation throttling intervals of every connected graph on n vertices.

Reports how many graphs have every value between m and M attained, the
spread M - m, and the graphs (if any) with a gap.

    python scripts/oti_survey.py --n 5
"""
import argparse
from collections import Counter

from zfthrottle.digraph import connected_graphs
from zfthrottle.throttling import oti


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--max-edges", type=int, default=16, help="skip graphs with more edges")
    args = ap.parse_args()

    spread = Counter()
    gaps = []
    seen = skipped = 0
    for g in connected_graphs(args.n):
        if g.num_edges() > args.max_edges:
            skipped += 1
            continue
        r = oti(g, pair_transposes=True)
        seen += 1
        spread[r.M - r.m] += 1
        if not r.full:
            gaps.append((g.edges(), r.attained))
    print(f"n={args.n}: {seen} connected graphs, {skipped} skipped")
    print("spread M - m:", dict(sorted(spread.items())))
    print(f"graphs with a gap in the attained values: {len(gaps)}")
    for edges, attained in gaps[:20]:
        print("  ", edges, attained)


if __name__ == "__main__":
    main()
