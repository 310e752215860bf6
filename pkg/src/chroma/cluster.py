"""Colour clusters, colourings and colour-permutation maps."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ChromaError
from .graph import Graph, VertexLabel

Colouring = Mapping[VertexLabel, int]


@dataclass(frozen=True)
class ColourCluster:
    """Ordered colour-class sizes ``r_1..r_l``."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sizes) == 0:
            raise ChromaError("empty cluster")
        for r in self.sizes:
            if isinstance(r, bool) or not isinstance(r, int) or r < 1:
                raise ChromaError("invalid class size")

    @classmethod
    def of(cls, sizes: Iterable[int]) -> ColourCluster:
        return cls(tuple(sizes))

    @property
    def ell(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def is_non_increasing(self) -> bool:
        return all(a >= b for a, b in zip(self.sizes, self.sizes[1:]))

    def to_json(self) -> dict:
        return {"classes": list(self.sizes)}

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))


def parse_cluster(spec: str | Sequence[int] | ColourCluster) -> ColourCluster:
    """Parse ``"5,4,3,3"``, ``"[5,4,3,3]"`` or ``{"classes": [...]}``."""
    if isinstance(spec, ColourCluster):
        return spec
    if not isinstance(spec, str):
        return _from_items(list(spec))
    text = spec.strip()
    if not text:
        raise ChromaError("empty cluster")
    if text[0] in "[{":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ChromaError(f"invalid class size: {exc}") from None
        if isinstance(data, dict):
            data = data.get("classes")
        if not isinstance(data, list):
            raise ChromaError("invalid class size")
        return _from_items(data)
    parts = [p.strip() for p in text.split(",")]
    items: list[int] = []
    for p in parts:
        try:
            items.append(int(p))
        except ValueError:
            raise ChromaError(f"invalid class size: {p!r}") from None
    return _from_items(items)


def _from_items(items: list) -> ColourCluster:
    if not items:
        raise ChromaError("empty cluster")
    for r in items:
        if isinstance(r, bool) or not isinstance(r, int) or r < 1:
            raise ChromaError(f"invalid class size: {r!r}")
    return ColourCluster(tuple(items))


@dataclass(frozen=True)
class PermutationMap:
    """Bijection on colours ``1..l``; ``image[i-1]`` is where colour ``i`` goes."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ChromaError("invalid permutation")

    @classmethod
    def identity(cls, ell: int) -> PermutationMap:
        return cls(tuple(range(1, ell + 1)))

    @classmethod
    def coerce(cls, m: PermutationMap | Sequence[int]) -> PermutationMap:
        return m if isinstance(m, PermutationMap) else cls(tuple(m))

    @property
    def ell(self) -> int:
        return len(self.image)

    def __call__(self, colour: int) -> int:
        return self.image[colour - 1]

    def then(self, other: PermutationMap) -> PermutationMap:
        """Apply ``self`` first, then ``other`` (the composite ``other o self``)."""
        if other.ell != self.ell:
            raise ChromaError("invalid permutation")
        return PermutationMap(tuple(other(self(i)) for i in range(1, self.ell + 1)))

    def inverse(self) -> PermutationMap:
        inv = [0] * self.ell
        for i, c in enumerate(self.image, start=1):
            inv[c - 1] = i
        return PermutationMap(tuple(inv))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.ell + 1))

    def __str__(self) -> str:
        return " ".join(f"{i}->{c}" for i, c in enumerate(self.image, start=1))


def canonicalize(c: ColourCluster) -> tuple[ColourCluster, PermutationMap]:
    """Sort sizes non-increasing (stable); the map sends old index to new index."""
    order = sorted(range(c.ell), key=lambda i: -c.sizes[i])
    image = [0] * c.ell
    for new, old in enumerate(order, start=1):
        image[old] = new
    return ColourCluster(tuple(c.sizes[i] for i in order)), PermutationMap(tuple(image))


@dataclass(frozen=True, eq=False)
class ColouredGraph:
    graph: Graph
    colouring: Mapping[VertexLabel, int]
    cluster: ColourCluster

    def __post_init__(self) -> None:
        missing = self.graph.vertices - self.colouring.keys()
        if missing:
            raise ChromaError("incomplete colouring")
        ell = self.cluster.ell
        counts = [0] * ell
        for x in self.graph.vertices:
            c = self.colouring[x]
            if not 1 <= c <= ell:
                raise ChromaError(f"colour {c} outside 1..{ell}")
            counts[c - 1] += 1
        if tuple(counts) != self.cluster.sizes:
            raise ChromaError("colour weights do not match cluster")

    @classmethod
    def by_class(cls, graph: Graph, cluster: ColourCluster) -> ColouredGraph:
        """Colour every ``v_{i,j}`` with ``i``."""
        return cls(graph, {x: x.class_index for x in graph.vertices}, cluster)

    @classmethod
    def from_colouring(cls, graph: Graph, colouring: Mapping[VertexLabel, int]) -> ColouredGraph:
        """Derive the cluster from the colouring, which must use exactly ``1..l``."""
        missing = graph.vertices - colouring.keys()
        if missing:
            raise ChromaError("incomplete colouring")
        used = sorted({colouring[x] for x in graph.vertices})
        if used != list(range(1, len(used) + 1)) or not used:
            raise ChromaError("colours must be the contiguous range 1..l")
        counts = [0] * len(used)
        for x in graph.vertices:
            counts[colouring[x] - 1] += 1
        return cls(graph, dict(colouring), ColourCluster(tuple(counts)))

    @property
    def ell(self) -> int:
        return self.cluster.ell

    def colour(self, x: VertexLabel) -> int:
        return self.colouring[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColouredGraph):
            return NotImplemented
        return (
            self.graph == other.graph
            and dict(self.colouring) == dict(other.colouring)
            and self.cluster == other.cluster
        )

    __hash__ = None  # type: ignore[assignment]


def apply_colour_map(cg: ColouredGraph, m: PermutationMap | Sequence[int]) -> ColouredGraph:
    """Recolour every vertex of colour ``i`` with ``m(i)``; the graph is untouched."""
    m = PermutationMap.coerce(m)
    if m.ell != cg.ell:
        raise ChromaError("invalid permutation")
    sizes = [0] * cg.ell
    for i, r in enumerate(cg.cluster.sizes, start=1):
        sizes[m(i) - 1] = r
    recoloured = {x: m(c) for x, c in cg.colouring.items()}
    return ColouredGraph(cg.graph, recoloured, ColourCluster(tuple(sizes)))
