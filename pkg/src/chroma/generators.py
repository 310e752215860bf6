"""Seeded random and exhaustive instance generators."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

import networkx as nx

from .cluster import ColourCluster, ColouredGraph
from .errors import ChromaError
from .graph import Graph, v


def random_cluster(rng: random.Random, ell_min: int = 2, ell_max: int = 6, size_max: int = 6) -> ColourCluster:
    ell = rng.randint(ell_min, ell_max)
    return ColourCluster(tuple(rng.randint(1, size_max) for _ in range(ell)))


def cluster_grid(ell_min: int, ell_max: int, size_max: int) -> Iterator[ColourCluster]:
    """Every non-increasing cluster with ``ell_min <= l <= ell_max`` and sizes in ``1..size_max``."""
    for ell in range(ell_min, ell_max + 1):
        for combo in itertools.combinations_with_replacement(range(size_max, 0, -1), ell):
            yield ColourCluster(combo)


def random_prufer(n: int, rng: random.Random) -> list[int]:
    if n < 2:
        raise ChromaError("a Prüfer sequence needs n ≥ 2")
    return [rng.randrange(n) for _ in range(n - 2)]


def tree_from_prufer(seq: Sequence[int]) -> ColouredGraph:
    """Decode a Prüfer sequence and 2-colour the tree.

    Node 0 gets colour 1. Vertices are relabelled ``v_{colour, ordinal}`` in
    node order, so the result lives in the same coordinates as every other
    construction.
    """
    t = nx.from_prufer_sequence(list(seq))
    side = {0: 1}
    for a, b in nx.bfs_edges(t, 0):
        side[b] = 3 - side[a]
    counters = {1: 0, 2: 0}
    label = {}
    for node in sorted(t.nodes):
        c = side[node]
        counters[c] += 1
        label[node] = v(c, counters[c])
    g = Graph.build(label.values(), ((label[a], label[b]) for a, b in t.edges))
    return ColouredGraph.from_colouring(g, {x: x.class_index for x in g.vertices})


def random_coloured_graph(
    cluster: ColourCluster, rng: random.Random, p: float = 0.3
) -> ColouredGraph:
    """Random graph on the cluster's vertices with each cross-colour pair kept with probability ``p``."""
    vs = [v(i, j) for i, r in enumerate(cluster.sizes, start=1) for j in range(1, r + 1)]
    edges = [
        (a, b)
        for a, b in itertools.combinations(vs, 2)
        if a.class_index != b.class_index and rng.random() < p
    ]
    return ColouredGraph.by_class(Graph.build(vs, edges), cluster)
