"""Evaluate the Hardy hierarchy on small arguments under a fuel budget."""

import argparse

from ordinalforge import hierarchy as H
from ordinalforge import term as T


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("terms", nargs="*", default=["w", "p(2@())", "p(w@())", "p(1@(1@()))"])
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--fuel", type=int, default=10**5)
    args = ap.parse_args()
    for text in args.terms:
        t = T.parse_term(text)
        cells = []
        for n in range(args.max_n + 1):
            fuel = H.Fuel(args.fuel)
            try:
                cells.append(f"H({n})={H.hardy(t, n, fuel=fuel)} [{fuel.used} steps]")
            except H.FuelExhausted:
                cells.append(f"H({n})=exhausted")
        print(f"{text}: " + ", ".join(cells))


if __name__ == "__main__":
    main()
