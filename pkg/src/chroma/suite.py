"""Parameter grids, structural invariant checks and the discrepancy report."""

from __future__ import annotations

import json
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

from . import embodiment as emb
from .chromatic import chromatic_number_exact, colour_weights, is_proper
from .cluster import ColourCluster, canonicalize
from .formulas import ComparisonRecord, FormulaId, Status, ids_with_prefix, readings, safe_compare
from .generators import cluster_grid, random_cluster, random_prufer
from .graph import graph_stats, is_triangle_free

SUITES = ("tree", "cor", "p33", "l34", "type1", "type2", "seq", "fib", "structure")


@dataclass
class SuiteConfig:
    suites: tuple[str, ...] = SUITES
    l_max: int = 4
    n_max: int = 3
    r_max: int = 5
    size_max: int = 3
    fib_max: int = 25
    trees: int = 20
    tree_n_max: int = 12
    random_clusters: int = 0
    clusters: tuple[tuple[int, ...], ...] = ()
    seed: int = 0
    limit: int | None = None
    chi_order_max: int = 12
    workers: int = 1

    def __post_init__(self) -> None:
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        for name in ("l_max", "n_max", "r_max", "size_max", "fib_max", "tree_n_max"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    def to_json(self) -> dict:
        d = asdict(self)
        d["suites"] = list(self.suites)
        d["clusters"] = [list(c) for c in self.clusters]
        d.pop("workers")
        return d


@dataclass(frozen=True)
class StructureRecord:
    check: str
    params: dict
    expected: dict
    observed: dict

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "expected": self.expected,
            "observed": self.observed,
            "ok": self.ok,
        }


@dataclass
class DiscrepancyReport:
    config: SuiteConfig
    records: list[ComparisonRecord] = field(default_factory=list)
    structure: list[StructureRecord] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        c = Counter(r.status.value for r in self.records)
        return {s.value: c.get(s.value, 0) for s in Status}

    @property
    def structural_failures(self) -> list[StructureRecord]:
        return [s for s in self.structure if not s.ok]

    def summary(self) -> dict:
        return {
            "records": len(self.records),
            "by_status": self.counts(),
            "non_integer_formula": sum(not r.formula_integral for r in self.records),
            "structural_checks": len(self.structure),
            "structural_failures": len(self.structural_failures),
        }

    def to_json(self) -> dict:
        used = {r.formula_id.value for r in self.records}
        return {
            "config": self.config.to_json(),
            "records": [r.to_json() for r in self.records],
            "structure": [s.to_json() for s in self.structure],
            "readings": {k: v for k, v in readings().items() if k in used},
            "summary": self.summary(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


# --- grids -------------------------------------------------------------------


def _clusters(cfg: SuiteConfig, rng: random.Random) -> list[ColourCluster]:
    found = set(cluster_grid(2, cfg.l_max, cfg.size_max)) if cfg.size_max >= 1 else set()
    for sizes in cfg.clusters:
        found.add(canonicalize(ColourCluster(tuple(sizes)))[0])
    for _ in range(cfg.random_clusters):
        if cfg.l_max >= 2 and cfg.size_max >= 1:
            found.add(canonicalize(random_cluster(rng, 2, cfg.l_max, cfg.size_max))[0])
    return sorted(found, key=lambda c: (c.ell, [-r for r in c.sizes]))


def _jobs(cfg: SuiteConfig) -> list[tuple[FormulaId, dict]]:
    rng = random.Random(cfg.seed)
    clusters = _clusters(cfg, rng)
    jobs: list[tuple[FormulaId, dict]] = []
    suites = set(cfg.suites)
    if "tree" in suites and cfg.tree_n_max >= 4:
        for _ in range(cfg.trees):
            seq = random_prufer(rng.randint(4, cfg.tree_n_max), rng)
            jobs += [(fid, {"prufer": seq}) for fid in ids_with_prefix("TREE_")]
    if "cor" in suites:
        jobs += [(FormulaId.COR_L2_BOUNDS, {"cluster": list(c.sizes)}) for c in clusters if c.ell == 2]
    partite = [{"n": n, "r": r} for n in range(1, cfg.n_max + 1) for r in range(2, cfg.r_max + 1)]
    if "p33" in suites:
        jobs += [(fid, dict(p)) for fid in ids_with_prefix("P33_") for p in partite]
    if "l34" in suites:
        jobs += [(fid, dict(p)) for fid in ids_with_prefix("L34_") for p in partite]
    if "type1" in suites:
        jobs += [(fid, {"cluster": list(c.sizes)}) for fid in ids_with_prefix("P35_", "C36_") for c in clusters]
    if "type2" in suites:
        jobs += [(fid, {"cluster": list(c.sizes)}) for fid in ids_with_prefix("P37_", "C38_") for c in clusters]
    if "seq" in suites:
        ells = range(2, cfg.l_max + 1)
        jobs += [(fid, {"l": L}) for fid in ids_with_prefix("T41_", "T43_") for L in ells]
        jobs += [(FormulaId.R42_M1MIN_CLOSED, {"l": L}) for L in range(1, cfg.l_max + 1)]
    if "fib" in suites:
        jobs += [
            (FormulaId.FIB_SUM, {"a": a, "l": L})
            for L in range(1, cfg.fib_max + 1)
            for a in range(1, L + 1)
        ]
        for fid in (FormulaId.FIB_SUMSQ, FormulaId.FIB_SUMCUBE, FormulaId.FIB_SUMQUAD):
            jobs += [(fid, {"l": L}) for L in range(1, cfg.fib_max + 1)]
    return jobs


# --- structural invariants ---------------------------------------------------


def _chi(cg, cfg: SuiteConfig) -> int | None:
    if cg.graph.order > cfg.chi_order_max:
        return None
    return chromatic_number_exact(cg.graph)


def _tree_checks(cluster: ColourCluster) -> list[StructureRecord]:
    out = []
    p = {"cluster": list(cluster.sizes)}
    for name in ("type1_tree", "type2_tree"):
        cg = getattr(emb, name)(cluster)
        st = graph_stats(cg.graph)
        out.append(
            StructureRecord(
                f"{name}_minimal",
                p,
                {"size": cluster.total - 1, "connected": True, "acyclic": True, "proper": True},
                {
                    "size": st.size,
                    "connected": st.connected,
                    "acyclic": st.acyclic,
                    "proper": is_proper(cg.graph, cg.colouring),
                },
            )
        )
    return out


def _completion_checks(cluster: ColourCluster, cfg: SuiteConfig) -> list[StructureRecord]:
    out = []
    ell = cluster.ell
    p = {"cluster": list(cluster.sizes)}
    completed = {}
    for base in ("type1", "type2"):
        tree = getattr(emb, f"{base}_tree")(cluster)
        full = emb.complete_embodiment(tree, base)
        completed[base] = full
        chi = _chi(full, cfg)
        out.append(
            StructureRecord(
                f"{base}_completion",
                p,
                {"added": (ell - 1) * (ell - 2) // 2, "proper": True, "chi": ell if chi is not None else None},
                {"added": full.graph.size - tree.graph.size, "proper": is_proper(full.graph, full.colouring), "chi": chi},
            )
        )
    thorn = emb.thorn_embodiment(cluster)
    chi = _chi(thorn, cfg)
    out.append(
        StructureRecord(
            "thorn_size",
            p,
            {"size": completed["type1"].graph.size, "proper": True, "chi": ell if chi is not None else None},
            {"size": thorn.graph.size, "proper": is_proper(thorn.graph, thorn.colouring), "chi": chi},
        )
    )
    top = emb.multipartite_max(cluster).graph.edges
    out.append(
        StructureRecord(
            "multipartite_contains_completions",
            p,
            {"type1": True, "type2": True},
            {base: cg.graph.edges <= top for base, cg in completed.items()},
        )
    )
    return out


def _odd_cycle_check(t: int) -> StructureRecord:
    cg = emb.odd_cycle_embodiment(t)
    return StructureRecord(
        "odd_cycle",
        {"t": t},
        {"triangle_free": True, "proper": True, "weights": [t, t, 1], "chi": 3},
        {
            "triangle_free": is_triangle_free(cg.graph),
            "proper": is_proper(cg.graph, cg.colouring),
            "weights": colour_weights(cg),
            "chi": chromatic_number_exact(cg.graph),
        },
    )


def structural_checks(cfg: SuiteConfig, clusters: Iterable[ColourCluster] | None = None) -> list[StructureRecord]:
    if clusters is None:
        clusters = _clusters(cfg, random.Random(cfg.seed))
    out: list[StructureRecord] = []
    for c in clusters:
        out += _tree_checks(c)
        out += _completion_checks(c, cfg)
    for t in range(2, max(2, cfg.l_max) + 1):
        out.append(_odd_cycle_check(t))
    return out


def run_suite(cfg: SuiteConfig) -> DiscrepancyReport:
    """Compare every formula over the configured grid; deterministic given ``cfg``."""
    jobs = _jobs(cfg)
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(lambda j: safe_compare(j[0], j[1], cfg.limit), jobs))
    else:
        records = [safe_compare(fid, p, cfg.limit) for fid, p in jobs]
    records.sort(key=ComparisonRecord.sort_key)
    report = DiscrepancyReport(cfg, records)
    if "structure" in cfg.suites:
        report.structure = structural_checks(cfg)
    return report
