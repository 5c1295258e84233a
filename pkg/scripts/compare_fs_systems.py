"""Tabulate class-based and norm-based fundamental sequences side by side."""

import argparse

from ordinalforge import classic_veblen as CV
from ordinalforge import hierarchy as H
from ordinalforge import term as T


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("terms", nargs="*", default=["w", "w+w", "p(2@())", "p(w@())"])
    ap.add_argument("--n", type=int, default=3, help="members 0..n-1")
    args = ap.parse_args()
    for text in args.terms:
        t = T.parse_term(text)
        print(text)
        for n in range(args.n):
            by_class = T.to_text(CV.fs_class(t, n))
            by_norm = T.to_text(H.fs_norm(t, n))
            print(f"  [{n}]  class {by_class:<24} norm {by_norm}")


if __name__ == "__main__":
    main()
