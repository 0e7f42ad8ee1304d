#!/usr/bin/env python3
"""Tabulate co-primality, candidate counts and certificate verdicts over a grid.

    python scripts/run_sweep.py --max 8 --jobs 4 --out sweep_8.csv

Thin wrapper over ``spehred sweep`` that also prints a short summary.
"""

import argparse
import csv
import sys
from collections import Counter

from spehred.cli import main


def summarize(path):
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    tally = Counter()
    for r in rows:
        tally["rows"] += 1
        tally["coprime"] += r["coprime_closed"] == "true"
        tally["disagree"] += r["coprime_closed"] != r["coprime_brute"]
        tally["with_exceptional"] += int(r["theorem_only"]) > 0
        tally["certified"] += r["certified"] == "true"
    for key in ("rows", "coprime", "disagree", "with_exceptional", "certified"):
        print(f"{key:>17}: {tally[key]}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--max", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", default="sweep.csv")
    args = parser.parse_args()
    code = main(["sweep", "--max", str(args.max), "--jobs", str(args.jobs), "--out", args.out])
    if code == 0:
        summarize(args.out)
    sys.exit(code)
