"""Simple, finite, undirected graphs on ``v_{i,j}`` labels.

Vertices are ``VertexLabel(class_index, ordinal)`` pairs. Edges are stored as
lexicographically ordered pairs so iteration and serialization are
deterministic. Graphs are immutable; every operation returns a new value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import ChromaError


class VertexLabel(NamedTuple):
    class_index: int
    ordinal: int

    def __str__(self) -> str:
        return f"v_{self.class_index}_{self.ordinal}"


Edge = tuple[VertexLabel, VertexLabel]


def v(i: int, j: int) -> VertexLabel:
    """Shorthand for ``VertexLabel(i, j)``."""
    return VertexLabel(i, j)


def canonical_edge(a: VertexLabel, b: VertexLabel) -> Edge:
    if a == b:
        raise ChromaError("loop forbidden")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    vertices: frozenset[VertexLabel]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for a, b in self.edges:
            if a == b:
                raise ChromaError("loop forbidden")
            if a not in self.vertices or b not in self.vertices:
                raise ChromaError("unknown vertex")
            if not a < b:
                raise ChromaError("edge endpoints not in canonical order")

    @classmethod
    def build(
        cls,
        vertices: Iterable[VertexLabel],
        edges: Iterable[tuple[VertexLabel, VertexLabel]] = (),
    ) -> Graph:
        vs = frozenset(VertexLabel(*x) for x in vertices)
        es = frozenset(canonical_edge(VertexLabel(*a), VertexLabel(*b)) for a, b in edges)
        return cls(vs, es)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[VertexLabel, frozenset[VertexLabel]]:
        adj: dict[VertexLabel, set[VertexLabel]] = {x: set() for x in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {x: frozenset(ns) for x, ns in adj.items()}

    def degree(self, x: VertexLabel) -> int:
        return len(self.adjacency[x])

    def sorted_vertices(self) -> list[VertexLabel]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, a: VertexLabel, b: VertexLabel) -> bool:
        return b in self.adjacency.get(a, ())

    def induced(self, keep: Iterable[VertexLabel]) -> Graph:
        ks = frozenset(keep)
        return Graph(ks, frozenset(e for e in self.edges if e[0] in ks and e[1] in ks))


@dataclass(frozen=True)
class GraphStats:
    order: int
    size: int
    degree_sequence: list[int]
    connected: bool
    acyclic: bool
    components: int


def components(g: Graph) -> list[frozenset[VertexLabel]]:
    """Connected components by breadth-first search, in sorted-seed order."""
    seen: set[VertexLabel] = set()
    comps = []
    for s in g.sorted_vertices():
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        seen.add(s)
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # order 0 and 1 count as connected
    return len(components(g)) <= 1


def graph_stats(g: Graph) -> GraphStats:
    k = len(components(g))
    return GraphStats(
        order=g.order,
        size=g.size,
        degree_sequence=sorted(g.degree(x) for x in g.vertices),
        connected=k <= 1,
        acyclic=g.size == g.order - k,
        components=k,
    )


def add_edges(g: Graph, pairs: Iterable[tuple[VertexLabel, VertexLabel]]) -> Graph:
    """Return ``g`` with ``pairs`` added; existing edges are left as they are."""
    new = set(g.edges)
    for a, b in pairs:
        a, b = VertexLabel(*a), VertexLabel(*b)
        if a not in g.vertices or b not in g.vertices:
            raise ChromaError("unknown vertex")
        new.add(canonical_edge(a, b))
    return Graph(g.vertices, frozenset(new))


def is_triangle_free(g: Graph) -> bool:
    adj = g.adjacency
    return not any(adj[a] & adj[b] for a, b in g.edges)
