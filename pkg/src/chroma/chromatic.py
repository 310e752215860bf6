"""Proper-colouring checks and an exact chromatic number for small graphs."""

from __future__ import annotations

from typing import Mapping

from .cluster import ColouredGraph
from .errors import ChromaError, InstanceTooLarge
from .graph import Graph, VertexLabel

DEFAULT_ORDER_BOUND = 24
DEFAULT_BUDGET = 10_000_000


def is_proper(g: Graph, c: Mapping[VertexLabel, int]) -> bool:
    if any(x not in c for x in g.vertices):
        raise ChromaError("incomplete colouring")
    return all(c[a] != c[b] for a, b in g.edges)


def colour_weights(cg: ColouredGraph) -> list[int]:
    counts = [0] * cg.ell
    for x in cg.graph.vertices:
        counts[cg.colouring[x] - 1] += 1
    return counts


def _greedy_clique(order: list[int], adj: list[set[int]]) -> int:
    best = 0
    for s in order:
        clique = [s]
        for u in sorted(adj[s], key=lambda u: -len(adj[u])):
            if all(u in adj[w] for w in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


def _dsatur_greedy(n: int, adj: list[set[int]]) -> int:
    colours = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        u = max(
            (x for x in range(n) if colours[x] == 0),
            key=lambda x: (len(sat[x]), len(adj[x]), -x),
        )
        c = 1
        while c in sat[u]:
            c += 1
        colours[u] = c
        for w in adj[u]:
            sat[w].add(c)
    return max(colours, default=0)


class _Search:
    """Backtracking k-colourability test with saturation ordering.

    A vertex may only open colour ``used + 1``, which removes the ``k!``
    relabelling symmetry.
    """

    def __init__(self, n: int, adj: list[set[int]], budget: int) -> None:
        self.n = n
        self.adj = adj
        self.budget = budget
        self.nodes = 0

    def colourable(self, k: int) -> bool:
        self.colours = [0] * self.n
        return self._extend(0, k, 0)

    def _pick(self) -> int:
        best, key = -1, None
        for x in range(self.n):
            if self.colours[x]:
                continue
            sat = len({self.colours[w] for w in self.adj[x] if self.colours[w]})
            cand = (sat, len(self.adj[x]), -x)
            if key is None or cand > key:
                best, key = x, cand
        return best

    def _extend(self, done: int, k: int, used: int) -> bool:
        if done == self.n:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise InstanceTooLarge("instance too large: node budget exhausted")
        u = self._pick()
        blocked = {self.colours[w] for w in self.adj[u]}
        for c in range(1, min(used + 1, k) + 1):
            if c in blocked:
                continue
            self.colours[u] = c
            if self._extend(done + 1, k, max(used, c)):
                return True
        self.colours[u] = 0
        return False


def chromatic_number_exact(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> int:
    """Minimum ``k`` with a proper ``k``-colouring, by exact search.

    Tries ``k`` upward from a greedy clique lower bound; the DSATUR greedy
    colour count caps the search. Deterministic for a given graph.
    """
    if g.order > order_bound:
        raise InstanceTooLarge(f"instance too large: order {g.order} > {order_bound}")
    if g.order == 0:
        return 0
    index = {x: i for i, x in enumerate(g.sorted_vertices())}
    adj = [set() for _ in range(g.order)]
    for a, b in g.edges:
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])
    lower = max(1, _greedy_clique(list(range(g.order)), adj))
    upper = _dsatur_greedy(g.order, adj)
    search = _Search(g.order, adj, budget)
    for k in range(lower, upper):
        if search.colourable(k):
            return k
    return upper


def is_k_colourable(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    index = {x: i for i, x in enumerate(g.sorted_vertices())}
    adj = [set() for _ in range(g.order)]
    for a, b in g.edges:
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])
    return _Search(g.order, adj, budget).colourable(k)
