"""Command-line interface.

Exit codes: 0 success, 1 usage or construction error, 2 structural failure
under ``verify --strict``. Formula mismatches are findings and never change
the exit code.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import serialize
from .chromatic import chromatic_number_exact
from .cluster import ColourCluster, parse_cluster
from .embodiment import embody, null_embodiment
from .errors import ChromaError
from .formulas import FormulaId, safe_compare
from .sequences import sequence_cluster
from .suite import SUITES, SuiteConfig, run_suite
from .zagreb import chromatic_indices, extremal_indices, factorial_limit

KINDS = [
    "type1",
    "type2",
    "type1_tree",
    "type2_tree",
    "type1_complete",
    "type2_complete",
    "thorn",
    "multipartite",
    "multipartite_max",
    "odd_cycle",
    "path_type",
    "null",
]

INDEX_KEYS = ["m1_min", "m1_max", "m2_min", "m2_max", "m3_min", "m3_max"]
SWEEP_COLUMNS = (
    ["sequence", "l", "kind", "cluster"]
    + INDEX_KEYS
    + [f"f_{k}" for k in INDEX_KEYS]
    + [f"ok_{k}" for k in INDEX_KEYS]
)
SWEEP_KINDS = ["type1_tree", "type2_tree", "type1_complete", "type2_complete"]

SWEEP_HELP = f"""\
CSV columns (fixed order): {", ".join(SWEEP_COLUMNS)}.
m*_min/m*_max are exact extremes over all l! colour permutations; f_* are the
printed closed forms for that sequence and construction; ok_* is 1 when they
agree. cluster is written as sizes joined by '-'.
"""


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _chi_text(cg) -> str:
    try:
        return str(chromatic_number_exact(cg.graph))
    except ChromaError:
        return "unknown"


def cmd_embody(args: argparse.Namespace) -> int:
    cluster = parse_cluster(args.cluster)
    cg = embody(args.kind, cluster, complete=args.complete)
    text = {
        "json": serialize.to_json,
        "dot": serialize.to_dot,
        "csv": serialize.to_csv,
    }[args.format](cg)
    _write(text, args.out)
    summary = f"order={cg.graph.order} size={cg.graph.size} chi={_chi_text(cg)}"
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return 0


def cmd_indices(args: argparse.Namespace) -> int:
    cluster = parse_cluster(args.cluster)
    cg = embody(args.kind, cluster, complete=args.complete)
    ind = chromatic_indices(cg, stated_k1_defaults=args.stated_k1_defaults)
    out: dict = {
        "cluster": list(cluster.sizes),
        "kind": args.kind,
        "complete": args.complete,
        "order": cg.graph.order,
        "size": cg.graph.size,
        "m1": ind.m1,
        "m2": ind.m2,
        "m3": ind.m3,
    }
    if args.extremal:
        out["extremal"] = extremal_indices(cg, limit=args.limit).to_json()
    _write(json.dumps(out, indent=2) + "\n", args.out)
    return 0


def _parse_cluster_list(text: str | None) -> tuple[tuple[int, ...], ...]:
    if not text:
        return ()
    return tuple(parse_cluster(part).sizes for part in text.split(";") if part.strip())


def cmd_verify(args: argparse.Namespace) -> int:
    suites = tuple(s.strip() for s in args.suites.split(",") if s.strip())
    try:
        cfg = SuiteConfig(
            suites=suites,
            l_max=args.l_max,
            n_max=args.n_max,
            r_max=args.r_max,
            size_max=args.size_max,
            fib_max=args.fib_max,
            trees=args.trees,
            random_clusters=args.random_clusters,
            clusters=_parse_cluster_list(args.clusters),
            seed=args.seed,
            limit=args.limit,
            workers=args.workers,
        )
    except ValueError as exc:
        raise ChromaError(str(exc)) from None
    report = run_suite(cfg)
    _write(report.dumps(), args.out)
    s = report.summary()
    line = " ".join(f"{k}={v}" for k, v in s["by_status"].items())
    print(
        f"records={s['records']} {line} structural_failures={s['structural_failures']}",
        file=sys.stdout if args.out else sys.stderr,
    )
    if args.strict and report.structural_failures:
        for f in report.structural_failures:
            print(f"structural failure: {f.check} {f.params}", file=sys.stderr)
        return 2
    return 0


def _sweep_ids(seq: str, kind: str) -> list[FormulaId]:
    if kind == "type1_tree":
        prefix = "P35_"
    elif kind == "type2_tree":
        prefix = "P37_"
    else:
        t = "T41" if seq == "s1" else "T43"
        prefix = f"{t}_{kind[:5].upper()}_"
    return [FormulaId(prefix + k.upper()) for k in INDEX_KEYS]


def sweep_rows(seq: str, l_max: int, kinds: list[str], limit: int | None = None) -> list[dict]:
    if l_max < 1:
        raise ChromaError("--l-max must be at least 1")
    lim = factorial_limit(limit)
    if l_max > lim:
        raise ChromaError(f"factorial search refused: ℓ={l_max} > {lim}")
    rows = []
    for ell in range(1, l_max + 1):
        cluster = sequence_cluster(seq, ell)
        for kind in kinds:
            cg = null_embodiment(cluster) if ell == 1 else embody(kind, cluster)
            ext = extremal_indices(cg, limit=lim)
            row: dict = {
                "sequence": seq,
                "l": ell,
                "kind": kind,
                "cluster": "-".join(map(str, cluster.sizes)),
            }
            for k in INDEX_KEYS:
                e = ext.index(int(k[1]))
                row[k] = e.min if k.endswith("min") else e.max
            for k, fid in zip(INDEX_KEYS, _sweep_ids(seq, kind)):
                params = {"cluster": list(cluster.sizes)} if fid.value.startswith("P3") else {"l": ell}
                rec = safe_compare(fid, params, lim)
                f = rec.formula_value
                row[f"f_{k}"] = str(f) if f is not None else ""
                row[f"ok_{k}"] = int(f is not None and f == row[k])
            rows.append(row)
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    bad = [k for k in kinds if k not in SWEEP_KINDS]
    if bad:
        raise ChromaError(f"unknown sweep kinds {bad}; choose from {SWEEP_KINDS}")
    rows = sweep_rows(args.sequence, args.l_max, kinds, args.limit)
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    _write(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chroma", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("embody", help="construct a graph for a colour cluster")
    e.add_argument("--cluster", required=True, help="class sizes, e.g. 5,4,3,3")
    e.add_argument("--kind", required=True, choices=KINDS)
    e.add_argument("--complete", action="store_true", help="close the representatives into a clique")
    e.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    e.add_argument("--out")
    e.set_defaults(func=cmd_embody)

    i = sub.add_parser("indices", help="chromatic Zagreb indices of a construction")
    i.add_argument("--cluster", required=True)
    i.add_argument("--kind", required=True, choices=KINDS)
    i.add_argument("--complete", action="store_true")
    i.add_argument("--extremal", action="store_true", help="also search all l! colour permutations")
    i.add_argument("--limit", type=int, help="largest l for the factorial search")
    i.add_argument("--stated-k1-defaults", action="store_true", help="report m3=1 for K1")
    i.add_argument("--out")
    i.set_defaults(func=cmd_indices)

    v = sub.add_parser("verify", help="audit every closed form against direct computation")
    v.add_argument("--suites", default=",".join(SUITES), help=f"comma list from {', '.join(SUITES)}")
    v.add_argument("--l-max", type=int, default=4)
    v.add_argument("--n-max", type=int, default=3, help="part size bound for complete multipartite checks")
    v.add_argument("--r-max", type=int, default=5, help="number-of-parts bound for complete multipartite checks")
    v.add_argument("--size-max", type=int, default=3, help="class size bound for the cluster grid")
    v.add_argument("--fib-max", type=int, default=25)
    v.add_argument("--trees", type=int, default=20, help="number of random trees")
    v.add_argument("--random-clusters", type=int, default=0)
    v.add_argument("--clusters", help="extra clusters separated by ';', e.g. '5,4,3,3;6,4,3,2'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--limit", type=int)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--out")
    v.add_argument("--strict", action="store_true", help="exit 2 if a structural invariant fails")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser(
        "sweep",
        help="extremal indices along s1/s2 sequence clusters",
        description=SWEEP_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    s.add_argument("--sequence", required=True, choices=["s1", "s2"])
    s.add_argument("--l-max", type=int, required=True)
    s.add_argument("--kinds", default="type1_complete,type2_complete")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--limit", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChromaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
