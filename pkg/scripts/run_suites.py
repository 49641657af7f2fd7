"""Run every verify suite (or a chosen few) and write manifests plus CSV tables."""
from __future__ import annotations

import argparse
from pathlib import Path

from koebe.report import table_csv
from koebe.suites import SUITES, ExperimentSuite, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("suites", nargs="*", default=list(SUITES), help="suite ids (default: all)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results", help="output directory (default: results)")
    args = ap.parse_args()

    out = Path(args.out)
    failed = []
    for sid in args.suites:
        man = run_suite(ExperimentSuite(sid, {}, args.seed, out))
        for name, rows in man.tables.items():
            (out / f"{sid}.{name}.csv").write_text(table_csv(rows))
        status = "pass" if man.passed else "FAIL"
        print(f"{sid:<18} {status}  {man.wall_clock:7.1f}s  {len(man.assertions)} assertions")
        if not man.passed:
            failed.append(sid)
    print(f"manifests in {out}/")
    raise SystemExit(4 if failed else 0)


if __name__ == "__main__":
    main()
