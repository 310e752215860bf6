#!/usr/bin/env python3
"""Run the full formula audit and print a match tally per formula id.

    python3 scripts/audit_formulas.py --l-max 5 --size-max 4 --out report.json
"""

from __future__ import annotations

import argparse
from collections import Counter, defaultdict
from pathlib import Path

from chroma.suite import SUITES, SuiteConfig, run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--l-max", type=int, default=5)
    ap.add_argument("--size-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--r-max", type=int, default=6)
    ap.add_argument("--trees", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    cfg = SuiteConfig(
        suites=SUITES,
        l_max=args.l_max,
        size_max=args.size_max,
        n_max=args.n_max,
        r_max=args.r_max,
        trees=args.trees,
        seed=args.seed,
        workers=args.workers,
    )
    report = run_suite(cfg)
    tally: dict[str, Counter] = defaultdict(Counter)
    for rec in report.records:
        tally[rec.formula_id.value][rec.status.value] += 1

    width = max(len(k) for k in tally)
    print(f"{'id':<{width}}  total  agree  disagree  error")
    for fid, counts in tally.items():
        total = sum(counts.values())
        agree = counts["match"] + counts["bound_holds"]
        bad = counts["mismatch"] + counts["bound_violated"]
        print(f"{fid:<{width}}  {total:5d}  {agree:5d}  {bad:8d}  {counts['error']:5d}")
    s = report.summary()
    print(f"\nrecords={s['records']} structural_checks={s['structural_checks']} "
          f"structural_failures={s['structural_failures']}")
    if args.out:
        args.out.write_text(report.dumps(), encoding="utf-8")
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
