"""Classical and chromatic Zagreb indices and their extremes over colour permutations."""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .chromatic import is_proper
from .cluster import ColouredGraph, PermutationMap, apply_colour_map
from .errors import ChromaError, InstanceTooLarge
from .graph import Graph

DEFAULT_FACTORIAL_LIMIT = 8
GUARD_ENV = "CHROMA_GUARD_LMAX"

# Stated default for M3 at K_1; the edge sum itself gives 0.
K1_STATED_M3 = 1


@dataclass(frozen=True)
class ChromaticIndices:
    m1: int
    m2: int
    m3: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m1, self.m2, self.m3)


@dataclass(frozen=True)
class Extremum:
    min: int
    max: int
    argmin: PermutationMap
    argmax: PermutationMap


@dataclass(frozen=True)
class ZagrebExtrema:
    m1: Extremum
    m2: Extremum
    m3: Extremum
    permutations_examined: int

    def index(self, k: int) -> Extremum:
        return (self.m1, self.m2, self.m3)[k - 1]

    def to_json(self) -> dict:
        out: dict = {}
        for name in ("m1", "m2", "m3"):
            e = getattr(self, name)
            out[name] = {
                "min": e.min,
                "max": e.max,
                "argmin": list(e.argmin.image),
                "argmax": list(e.argmax.image),
            }
        out["permutations_examined"] = self.permutations_examined
        return out


def classical_indices(g: Graph) -> tuple[int, int, int]:
    d = {x: g.degree(x) for x in g.vertices}
    m1 = sum(k * k for k in d.values())
    m2 = sum(d[a] * d[b] for a, b in g.edges)
    m3 = sum(abs(d[a] - d[b]) for a, b in g.edges)
    return m1, m2, m3


def _is_k1(cg: ColouredGraph) -> bool:
    return cg.graph.order == 1


def chromatic_indices(cg: ColouredGraph, stated_k1_defaults: bool = False) -> ChromaticIndices:
    """Zagreb sums with vertex degrees replaced by colour subscripts.

    With ``stated_k1_defaults`` the single-vertex graph reports ``m3 = 1``
    (the convention some authors state) instead of the computed 0.
    """
    if not is_proper(cg.graph, cg.colouring):
        raise ChromaError("not a proper colouring")
    c = cg.colouring
    m1 = sum(c[x] ** 2 for x in cg.graph.vertices)
    m2 = sum(c[a] * c[b] for a, b in cg.graph.edges)
    m3 = sum(abs(c[a] - c[b]) for a, b in cg.graph.edges)
    if stated_k1_defaults and _is_k1(cg):
        m3 = K1_STATED_M3
    return ChromaticIndices(m1, m2, m3)


def factorial_limit(limit: int | None = None) -> int:
    """Explicit ``limit`` wins, then ``$CHROMA_GUARD_LMAX``, then the default."""
    if limit is not None:
        return limit
    env = os.environ.get(GUARD_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ChromaError(f"{GUARD_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_FACTORIAL_LIMIT


@dataclass(frozen=True)
class ColourProfile:
    """Colour weights and edge counts per unordered colour pair.

    Every chromatic index under any permutation is a function of this
    profile alone, which makes the factorial scan cheap.
    """

    weights: tuple[int, ...]
    pairs: tuple[tuple[int, int, int], ...]  # (a, b, count) with a < b

    @classmethod
    def of(cls, cg: ColouredGraph) -> ColourProfile:
        if not is_proper(cg.graph, cg.colouring):
            raise ChromaError("not a proper colouring")
        c = cg.colouring
        counts = Counter(tuple(sorted((c[a], c[b]))) for a, b in cg.graph.edges)
        return cls(cg.cluster.sizes, tuple((a, b, n) for (a, b), n in sorted(counts.items())))

    def evaluate(self, image: tuple[int, ...]) -> tuple[int, int, int]:
        m1 = sum(w * image[i] ** 2 for i, w in enumerate(self.weights))
        m2 = m3 = 0
        for a, b, n in self.pairs:
            pa, pb = image[a - 1], image[b - 1]
            m2 += n * pa * pb
            m3 += n * abs(pa - pb)
        return m1, m2, m3


# Per index: (min value, argmin image, max value, argmax image).
_Partial = list[tuple[int, tuple[int, ...], int, tuple[int, ...]]]


def _scan(profile: ColourProfile, head: int | None) -> tuple[_Partial, int]:
    ell = len(profile.weights)
    if head is None:
        perms = itertools.permutations(range(1, ell + 1))
    else:
        rest = [c for c in range(1, ell + 1) if c != head]
        perms = ((head, *p) for p in itertools.permutations(rest))
    best: _Partial | None = None
    seen = 0
    for image in perms:
        seen += 1
        vals = profile.evaluate(image)
        if best is None:
            best = [(x, image, x, image) for x in vals]
            continue
        for k, x in enumerate(vals):
            lo, lo_arg, hi, hi_arg = best[k]
            if (x, image) < (lo, lo_arg):
                lo, lo_arg = x, image
            if (-x, image) < (-hi, hi_arg):
                hi, hi_arg = x, image
            best[k] = (lo, lo_arg, hi, hi_arg)
    assert best is not None
    return best, seen


def _merge(a: _Partial, b: _Partial) -> _Partial:
    out = []
    for (alo, alo_arg, ahi, ahi_arg), (blo, blo_arg, bhi, bhi_arg) in zip(a, b):
        lo = min((alo, alo_arg), (blo, blo_arg))
        hi = min((-ahi, ahi_arg), (-bhi, bhi_arg))
        out.append((lo[0], lo[1], -hi[0], hi[1]))
    return out


def extremal_indices(
    cg: ColouredGraph, limit: int | None = None, workers: int = 1
) -> ZagrebExtrema:
    """Exact min/max of each chromatic index over all ``l!`` colour permutations.

    Ties go to the lexicographically smallest permutation image. With
    ``workers > 1`` the permutations are split by their first image and the
    partial results merged; the merge is associative, so the answer does not
    depend on scheduling.
    """
    ell = cg.ell
    lim = factorial_limit(limit)
    if ell > lim:
        raise InstanceTooLarge(f"factorial search refused: ℓ={ell} > {lim}")
    profile = ColourProfile.of(cg)
    if workers > 1 and ell > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda h: _scan(profile, h), range(1, ell + 1)))
        best, seen = parts[0]
        for part, n in parts[1:]:
            best = _merge(best, part)
            seen += n
    else:
        best, seen = _scan(profile, None)
    ext = [
        Extremum(lo, hi, PermutationMap(lo_arg), PermutationMap(hi_arg))
        for lo, lo_arg, hi, hi_arg in best
    ]
    return ZagrebExtrema(ext[0], ext[1], ext[2], seen)


def heuristic_map(kind: str, ell: int) -> PermutationMap:
    """Named colour maps: ``reverse``, ``shift`` and ``zigzag``.

    zigzag sends odd positions down from ``l`` and even positions up from 1:
    ``1->l, 2->1, 3->l-1, 4->2, ...``.
    """
    if ell < 1:
        raise ChromaError("ℓ must be at least 1")
    if kind == "reverse":
        image = [ell - i + 1 for i in range(1, ell + 1)]
    elif kind == "shift":
        image = [i + 1 if i < ell else 1 for i in range(1, ell + 1)]
    elif kind == "zigzag":
        high, low = ell, 1
        image = []
        for i in range(1, ell + 1):
            if i % 2:
                image.append(high)
                high -= 1
            else:
                image.append(low)
                low += 1
    else:
        raise ChromaError(f"unknown heuristic map {kind!r}")
    return PermutationMap(tuple(image))


def heuristic_indices(cg: ColouredGraph, kind: str) -> ChromaticIndices:
    return chromatic_indices(apply_colour_map(cg, heuristic_map(kind, cg.ell)))
