"""Print the number of standard terms per norm level and check the norm axioms."""

import argparse
import time

from ordinalforge import hierarchy as H
from ordinalforge import term as T


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-norm", type=int, default=7)
    args = ap.parse_args()
    start = time.perf_counter()
    counts = H.count_by_norm(args.max_norm)
    terms = H.enumerate_standard(H.NormBudget(args.max_norm))
    for k, c in enumerate(counts):
        print(f"norm {k}: {c}")
    worst = max(H.norm_L(T.succ(t)) - H.norm_L(t) for t in terms)
    print(f"total {len(terms)}; max L(t+1) - L(t) = {worst}; "
          f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
