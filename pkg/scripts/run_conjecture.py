"""Sweep every orientation of P_n and compare the max th with the alternating-path value.

    python scripts/run_conjecture.py --nmax 16 --threads 8
    python scripts/run_conjecture.py --nmax 18 --shard 0/4 --out part0.json

Shard outputs combine with ``zfthrottle merge``.
"""
import argparse
import time

from zfthrottle.throttling import default_threads
from zfthrottle.verifier import verify_alternating_conjecture


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--nmax", type=int, default=14)
    ap.add_argument("--shard", default=None, help="i/j")
    ap.add_argument("--threads", type=int, default=default_threads())
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    shard = tuple(int(x) for x in args.shard.split("/")) if args.shard else None

    start = time.perf_counter()
    rep = verify_alternating_conjecture(args.nmax, shard, args.threads)
    for note in rep.notes:
        flag = "ok" if note["max"] == note["expected"] or note["hi"] - note["lo"] < note["total"] else "MISMATCH"
        print(f"n={note['n']:3d}  orientations {note['hi'] - note['lo']:>8d}  max th {note['max']}  "
              f"expected {note['expected']}  attained by {note['count']}  {flag}")
    print(f"{'passed' if rep.passed else 'FAILED'} in {time.perf_counter() - start:.1f}s")
    if args.out:
        with open(args.out, "w") as f:
            f.write(rep.to_json() + "\n")
    return 0 if rep.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
