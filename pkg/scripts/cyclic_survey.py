"""Survey of cyclic quotients C^2/mu_n by which obstruction rules out conicalness.

For each n up to --max-n, counts the non-homogeneous (q != 1) quotients whose
two lowest diagonal weights differ, and those with tied lowest weights that
need a separating C*-action. Also reports the largest s used by the
(s+1, s) search.

    python scripts/cyclic_survey.py [--max-n 100] [--csv out.csv]
"""
import argparse
import csv
import math
import sys

from wsing import Mechanism, conical_cyclic, make_cyclic


def survey(max_n):
    for n in range(3, max_n + 1):
        lowest_differ = tied = max_s = 0
        for q in range(2, n):
            if math.gcd(q, n) != 1:
                continue
            v = conical_cyclic(make_cyclic(n, q))
            if v.mechanism is Mechanism.THEOREM_1:
                lowest_differ += 1
            else:
                tied += 1
                max_s = max(max_s, v.action.beta)
        yield {"n": n, "lowest_differ": lowest_differ, "lowest_tied": tied, "max_s": max_s}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=100)
    ap.add_argument("--csv", help="write per-n rows to this file")
    args = ap.parse_args()

    rows = list(survey(args.max_n))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    total_differ = sum(r["lowest_differ"] for r in rows)
    total_tied = sum(r["lowest_tied"] for r in rows)
    print(f"n <= {args.max_n}: {total_differ} non-homogeneous quotients with unequal lowest weights, "
          f"{total_tied} with tied lowest weights")
    print(f"largest s in the separating search: {max(r['max_s'] for r in rows)}")
    tied_ns = [r["n"] for r in rows if r["lowest_tied"]]
    print("first n with a tie:", tied_ns[:15], file=sys.stdout)


if __name__ == "__main__":
    main()
