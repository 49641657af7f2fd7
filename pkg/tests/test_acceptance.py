"""One test per acceptance criterion; each runs the matching verify suite.

A summary line per criterion is printed at the end of the session (see
conftest.pytest_terminal_summary) and also immediately when run with -s.
"""
import time

import pytest

from koebe.suites import run_suite

RESULTS: dict[int, str] = {}

CRITERIA = [
    (1, "scol-exact-bound", "scol_d <= (2d+1)^2 on packed triangulations, exact", 120),
    (2, "grid-scol", "grid certificates >= 4, 16, 36, exact", 60),
    (3, "multigrid-wcol", "wcol_28 >= 56 on 532 vertices, exact", 120),
    (4, "adm-lower", "trimmed families >= 3 (d=32) and >= 7 (d=64), exact", 300),
    (5, "grid-scol-lower", "all 9! orderings >= 2, 1000 orderings >= 5, exact", 300),
    (6, "adm-trend", "adm ln d / d at d=64 <= 2x d=4", 600),
    (7, "lemma33-floor", "minimum >= floor, zero tolerance", 120),
    (8, "mu-calculus", "ring error <= 1e-9, zero disc violations", 60),
    (9, "bucket-machinery", "p, p_t, |L|, jump lemma, 1+r <= a <= 2dr, exact", 180),
    (10, "packing-solver", "K4 1e-6, W6 1e-10, icosahedron 1e-8", 10),
]


@pytest.mark.slow
@pytest.mark.parametrize("num, suite, what, budget", CRITERIA, ids=[f"AC{c[0]}-{c[1]}" for c in CRITERIA])
def test_criterion(num, suite, what, budget):
    t0 = time.perf_counter()
    try:
        man = run_suite(suite)
    except Exception as exc:
        RESULTS[num] = f"AC{num:<2} FAIL  {suite:<17} {what}  [raised {type(exc).__name__}: {exc}]"
        raise
    elapsed = time.perf_counter() - t0
    failed = [f"{a.name} ({a.detail})" for a in man.assertions if not a.passed]
    in_time = elapsed <= budget
    ok = man.passed and in_time
    note = "; ".join(failed) if failed else f"{len(man.assertions)} assertions"
    if not in_time:
        note += f"; took {elapsed:.1f}s > {budget}s"
    line = f"AC{num:<2} {'PASS' if ok else 'FAIL'}  {suite:<17} {what}  [{elapsed:.1f}s, {note}]"
    RESULTS[num] = line
    print(line)
    assert man.passed, failed
    assert in_time, f"{suite} took {elapsed:.1f}s, budget {budget}s"
