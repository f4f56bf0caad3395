#!/usr/bin/env python3
"""Sup-norm error of the modified q-Bernstein operator on the built-in test functions.

For fixed q < 1 the operator does not reproduce constants (the basis sums to
(1 + (1-q)[x][1-x])**n), so the error stops shrinking in n unless q -> 1 too.
"""

import argparse
import csv
import sys

from qbernstein.cli import FUNCTIONS, approx_rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=float, nargs="+", default=[0.5, 0.9, 0.99, 0.999999])
    parser.add_argument("--n", type=int, nargs="+", default=[2, 4, 8, 16, 32])
    parser.add_argument("--samples", type=int, default=200)
    args = parser.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["fn", "q", "n", "sup_norm"])
    for fn in FUNCTIONS:
        for q in args.q:
            for n in args.n:
                sup = max(r[3] for r in approx_rows(fn, n, q, args.samples))
                writer.writerow([fn, repr(q), n, repr(sup)])


if __name__ == "__main__":
    main()
