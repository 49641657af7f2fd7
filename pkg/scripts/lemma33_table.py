"""Best-found minimum of the rho-sequence sum against the proven floor, over l."""
from __future__ import annotations

import argparse
import math
import sys

from koebe.measure import MinimizeConfig, lemma33_floor, lemma33_minimize
from koebe.report import csv_text


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ells", type=int, nargs="+", default=[1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024])
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rows = []
    for ell in args.ells:
        val, seq = lemma33_minimize(ell, MinimizeConfig(restarts=args.restarts, seed=args.seed))
        floor = lemma33_floor(ell)
        # val * l / ln^2 l shows how the minimum scales against the floor's shape
        shape = val * (ell + 1) / math.log(ell) ** 2 if ell > 1 else float("nan")
        rows.append((ell, val, floor, val / floor if floor > 0 else float("inf"), shape, max(seq.rho[:-1])))
    sys.stdout.write(csv_text(["ell", "minimum", "floor", "ratio", "min_times_l_over_ln2", "max_rho"], rows))


if __name__ == "__main__":
    main()
