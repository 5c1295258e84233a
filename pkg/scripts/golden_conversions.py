"""Run the psi_0 conversion pipeline on named milestones and print every stage."""

import argparse

from ordinalforge import buchholz as B
from ordinalforge import term as T

MILESTONES = [
    ("e0", "W"),
    ("zeta0", "W^2"),
    ("Gamma0", "W^W"),
    ("Ackermann", "W^(W^2)"),
    ("small Veblen", "W^(W^w)"),
    ("large Veblen", "W^(W^W)"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("oterms", nargs="*", help="extra base-W normal forms")
    args = ap.parse_args()
    rows = MILESTONES + [("", s) for s in args.oterms]
    for name, text in rows:
        a = B.parse_oterm(text)
        t = B.t_map(a)
        print(f"{name:>13} {text:>10}  t = {B.oterm_to_text(t):<8} "
              f"V = {T.to_text(B.v_map(t)):<16} psi0 = {T.to_text(B.psi0_convert(a))}")


if __name__ == "__main__":
    main()
