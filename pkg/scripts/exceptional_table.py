#!/usr/bin/env python3
"""Print the points that only the unconditional theorem certifies, for a few families.

Reproduces the two worked families (a=b=c=d and a=b<c=d) and then lists a
few general problems where no closed form is known.
"""

import argparse

from spehred import InductionProblem, exceptional_points


def fmt(points):
    return "{" + ", ".join(str(w) for w in sorted(points)) + "}"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max", type=int, default=8)
    args = parser.parse_args()

    print("a=b=c=d")
    for c in range(1, args.max + 1):
        print(f"  c={c:<3} {fmt(exceptional_points(InductionProblem(c, c, c, c)))}")

    print("a=b < c=d")
    for c in range(2, args.max + 1):
        for a in range(1, c):
            print(f"  a={a:<2} c={c:<3} {fmt(exceptional_points(InductionProblem(a, a, c, c)))}")

    print("general (nonempty only)")
    for a in range(1, 5):
        for b in range(1, 5):
            for c in range(1, 5):
                for d in range(1, 5):
                    pts = exceptional_points(InductionProblem(a, b, c, d))
                    if pts and not (a == b and c == d):
                        print(f"  {(a, b, c, d)} {fmt(pts)}")


if __name__ == "__main__":
    main()
