"""How far is the Koebe ordering from the best ordering on small triangulations?

For each random triangulation we pack it, take the Koebe ordering, and
compare its wcol/scol/adm against the minimum over all orderings (n <= 10)
or an annealed upper bound on that minimum (larger n).
"""
from __future__ import annotations

import argparse
import sys

from koebe.families import random_triangulation
from koebe.geometry import koebe_ordering
from koebe.packing import pack
from koebe.reach import metric_of_ordering
from koebe.report import csv_text
from koebe.search import EXHAUSTIVE_MAX_N, graph_min_metric


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10, 30])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--d", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--kinds", nargs="+", default=["wcol", "scol", "adm"])
    ap.add_argument("--iterations", type=int, default=3000)
    args = ap.parse_args()

    rows = []
    for n in args.sizes:
        strategy = "exhaustive" if n <= EXHAUSTIVE_MAX_N else "anneal"
        for seed in range(args.seeds):
            g = random_triangulation(n, seed)
            order = koebe_ordering(pack(g)[0])
            for kind in args.kinds:
                for d in args.d:
                    k = metric_of_ordering(g, order, d, kind).value
                    best, _ = graph_min_metric(g, d, kind, strategy=strategy, seed=seed, iterations=args.iterations)
                    rows.append((n, seed, kind, d, k, best, strategy, k / best))
    sys.stdout.write(csv_text(["n", "seed", "kind", "d", "koebe", "best", "strategy", "ratio"], rows))


if __name__ == "__main__":
    main()
