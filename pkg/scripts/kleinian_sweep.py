"""Conicalness verdicts for the Kleinian surface singularities A_k, D_k, E_6..E_8.

    python scripts/kleinian_sweep.py [--max-k 12]
"""
import argparse

from wsing import conical_from_weights, from_list, normalize


def rows(max_k):
    for k in range(1, max_k + 1):
        yield f"A_{k}", [k + 1, k + 1, 2]
    for k in range(4, max_k + 1):
        yield f"D_{k}", [k - 1, k - 2, 2]
    yield "E_6", [6, 4, 3]
    yield "E_7", [9, 6, 4]
    yield "E_8", [15, 10, 6]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=12)
    args = ap.parse_args()
    for name, w in rows(args.max_k):
        v = conical_from_weights(normalize(from_list(w)))
        mech = v.mechanism.value if v.mechanism else ""
        print(f"{name:6s} {str(v.weights):16s} {v.kind.value:20s} {mech}")


if __name__ == "__main__":
    main()
