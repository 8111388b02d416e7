#!/usr/bin/env python3
"""Compare the compiled and pure-Python solver kernels.

Runs the regression instances (where exhaustive search actually works) under
each available kernel, checks that outcomes and node counts agree, and prints
wall times plus the speedup.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from packedge import (available_kernels, flower_snark, generalized_petersen,
                      obstruction12, petersen, solve, tietze)

CASES = [
    ("petersen (1,1,2,2)", petersen, "1,1,2,2"),
    ("petersen (1,1,1,3)", petersen, "1,1,1,3"),
    ("tietze (1,1,1,3)", tietze, "1,1,1,3"),
    ("tietze (1,1,1,3,3)", tietze, "1,1,1,3,3"),
    ("obstruction12 (1,1,2,2,2)", obstruction12, "1,1,2,2,2"),
    ("obstruction12 (1,2^6)", obstruction12, "1,2^6"),
    ("gp(9,2) (1,1,1,3)", lambda: generalized_petersen(9, 2), "1,1,1,3"),
    ("flower5 (1,1,1,3)", lambda: flower_snark(5), "1,1,1,3"),
]


def best_time(g, seq, kernel, repeat):
    best = float("inf")
    outcome = None
    for _ in range(repeat):
        out = solve(g, seq, kernel=kernel)
        best = min(best, out.seconds)
        outcome = out
    return best, outcome


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    kernels = sorted(available_kernels())
    print(f"kernels: {', '.join(kernels)}   (repeat={args.repeat}, best-of)")
    header = f"{'case':30s} {'status':14s} {'nodes':>10s}"
    for name in kernels:
        header += f" {name:>10s}"
    if len(kernels) == 2:
        header += f" {'speedup':>8s}"
    print(header)
    print("-" * len(header))

    for label, graph_fn, seq in CASES:
        g = graph_fn()
        times = {}
        outcomes = {}
        for name in kernels:
            times[name], outcomes[name] = best_time(g, seq, name, args.repeat)
        statuses = {o.status for o in outcomes.values()}
        nodes = {o.nodes for o in outcomes.values()}
        assert len(statuses) == 1 and len(nodes) == 1, \
            f"kernel disagreement on {label}: {outcomes}"
        out = next(iter(outcomes.values()))
        row = f"{label:30s} {out.status.value:14s} {out.nodes:>10d}"
        for name in kernels:
            row += f" {times[name] * 1000:>8.2f}ms"
        if len(kernels) == 2:
            row += f" {times['python'] / max(times['cython'], 1e-9):>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
