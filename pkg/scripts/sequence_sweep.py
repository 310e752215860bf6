#!/usr/bin/env python3
"""Tabulate exact extremal indices along the s1 and s2 clusters next to the
closed forms, for every Type-I/II construction."""

from __future__ import annotations

import argparse

from chroma.cli import INDEX_KEYS, SWEEP_KINDS, sweep_rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--l-max", type=int, default=6)
    args = ap.parse_args()

    for seq in ("s1", "s2"):
        rows = sweep_rows(seq, args.l_max, SWEEP_KINDS)
        print(f"== {seq}")
        for row in rows:
            wrong = [k for k in INDEX_KEYS if not row[f"ok_{k}"]]
            cells = " ".join(f"{k}={row[k]}" for k in INDEX_KEYS)
            flag = "ok" if not wrong else "differs: " + ",".join(wrong)
            print(f"l={row['l']} {row['kind']:<15} {cells}  [{flag}]")


if __name__ == "__main__":
    main()
