#!/usr/bin/env python3
"""Print how fast B_{k,n}(x, q) and S(n, k:q) approach their classical values as q -> 1."""

import argparse

from qbernstein import bernstein as bs
from qbernstein import stirling_bernoulli as sb


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--decades", type=int, default=6, help="q = 1 - 10**-m for m = 1..decades")
    args = parser.parse_args()

    xs = [j / 20 for j in range(21)]
    table = sb.stirling2_recurrence(args.max_n)
    print(f"{'q':>12}  {'max|B_q - B|':>14}  {'max rel S err':>14}")
    for m in range(1, args.decades + 1):
        q = 1 - 10.0**-m
        basis_err = max(
            bs.classical_limit_check(k, n, x, [q])[0]
            for x in xs
            for n in range(args.max_n + 1)
            for k in range(n + 1)
        )
        stirling_err = max(
            abs(sb.q_stirling(n, k, q) - float(table(n, k))) / float(table(n, k))
            for n in range(1, args.max_n + 1)
            for k in range(1, n + 1)
        )
        print(f"{q:>12.8f}  {basis_err:>14.3e}  {stirling_err:>14.3e}")


if __name__ == "__main__":
    main()
