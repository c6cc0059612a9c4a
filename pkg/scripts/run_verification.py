#!/usr/bin/env python3
"""Run the cross-theorem verification sweep and print a human summary.

Example:
    python scripts/run_verification.py --max-n 3 --max-m 5
    python scripts/run_verification.py            # full acceptance catalog
"""

from __future__ import annotations

import argparse
import sys
import time

from flowpoly.abelian import parse_group
from flowpoly.catalog import all_multigraphs
from flowpoly.harness import DEFAULT_GROUP_NAMES, run_classical_checks, run_verification


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-m", type=int, default=6)
    parser.add_argument("--groups", default=",".join(DEFAULT_GROUP_NAMES))
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    specs = tuple(parse_group(name) for name in args.groups.split(","))
    graphs = list(all_multigraphs(args.max_n, args.max_m))
    print(f"catalog: {len(graphs)} multigraphs (n <= {args.max_n}, m <= {args.max_m})")
    print(f"groups:  {', '.join(str(s) for s in specs)}")

    started = time.time()
    last = [started]

    def progress(done: int) -> None:
        now = time.time()
        if now - last[0] >= 10:
            last[0] = now
            print(f"  ... {done}/{len(graphs)} graphs, {now - started:.0f}s", flush=True)

    report = run_verification(graphs, specs, seed=args.seed, progress=progress)
    elapsed = time.time() - started

    suites = list(report.suites.values()) + [run_classical_checks()]
    width = max(len(s.name) for s in suites)
    for suite in suites:
        status = "ok" if suite.ok else "FAILED"
        line = f"{suite.name:<{width}}  {status:>6}  checked={suite.checked}"
        if suite.skipped:
            line += f" skipped={suite.skipped}"
        print(line)
        if suite.first_failure:
            print(f"    first failure: {suite.first_failure}")
    print(f"{report.instance_count} boundary-function instances in {elapsed:.1f}s")
    return 0 if all(s.ok for s in suites) else 1


if __name__ == "__main__":
    sys.exit(main())
