"""Graph constructions for colour clusters.

Every constructor labels vertex ``j`` of colour class ``i`` as ``v_{i,j}``
and colours it ``i``. The trees have ``sum(r) - 1`` edges; completing them
puts a clique on the class representatives ``v_{1,1}, ..., v_{l,1}``.
"""

from __future__ import annotations

import enum
import itertools
from typing import Sequence

from .cluster import ColourCluster, ColouredGraph, parse_cluster
from .errors import ChromaError, InstanceTooLarge
from .graph import Graph, VertexLabel, add_edges, is_connected, v

RAINBOW_ORDER_BOUND = 20


class EmbodimentKind(str, enum.Enum):
    TYPE1_TREE = "type1_tree"
    TYPE2_TREE = "type2_tree"
    TYPE1_COMPLETE = "type1_complete"
    TYPE2_COMPLETE = "type2_complete"
    THORN = "thorn"
    MULTIPARTITE_MAX = "multipartite_max"
    ODD_CYCLE = "odd_cycle"
    PATH_TYPE = "path_type"


def _vertices(c: ColourCluster) -> list[VertexLabel]:
    return [v(i, j) for i, r in enumerate(c.sizes, start=1) for j in range(1, r + 1)]


def _need_two(c: ColourCluster, what: str) -> None:
    if c.ell < 2:
        raise ChromaError(f"{what} requires ℓ ≥ 2")


def type1_tree(c: ColourCluster) -> ColouredGraph:
    """Star on ``v_{1,1}`` over classes 2..l, remaining class-1 vertices hang on ``v_{2,1}``."""
    c = parse_cluster(c)
    _need_two(c, "Type-I")
    r = c.sizes
    edges = [(v(1, 1), v(j, k)) for j in range(2, c.ell + 1) for k in range(1, r[j - 1] + 1)]
    edges += [(v(1, i), v(2, 1)) for i in range(2, r[0] + 1)]
    return ColouredGraph.by_class(Graph.build(_vertices(c), edges), c)


def type2_tree(c: ColourCluster) -> ColouredGraph:
    """``v_{i,1}`` joins all of class ``i+1``; extra class-1 vertices hang on ``v_{2,1}``."""
    c = parse_cluster(c)
    _need_two(c, "Type-II")
    r = c.sizes
    edges = [
        (v(i, 1), v(i + 1, j)) for i in range(1, c.ell) for j in range(1, r[i] + 1)
    ]
    edges += [(v(2, 1), v(1, j)) for j in range(2, r[0] + 1)]
    return ColouredGraph.by_class(Graph.build(_vertices(c), edges), c)


def representatives(ell: int) -> list[VertexLabel]:
    return [v(i, 1) for i in range(1, ell + 1)]


def complete_embodiment(cg: ColouredGraph, kind: str = "type1") -> ColouredGraph:
    """Close the representatives into ``K_l``; adds ``(l-1)(l-2)/2`` edges.

    ``kind`` only documents which tree was passed in; the completion rule is
    the same for both.
    """
    if kind not in ("type1", "type2"):
        raise ChromaError(f"unknown completion kind {kind!r}")
    reps = representatives(cg.ell)
    if cg.ell < 2 or any(x not in cg.graph.vertices for x in reps):
        raise ChromaError("not a Type-I/II tree")
    pairs = list(itertools.combinations(reps, 2))
    return ColouredGraph(add_edges(cg.graph, pairs), cg.colouring, cg.cluster)


def null_embodiment(c: ColourCluster) -> ColouredGraph:
    c = parse_cluster(c)
    if c.ell != 1:
        raise ChromaError("not a single-class cluster")
    return ColouredGraph.by_class(Graph.build(_vertices(c)), c)


def multipartite_max(c: ColourCluster) -> ColouredGraph:
    """Complete l-partite graph with parts of sizes ``r_1..r_l``."""
    c = parse_cluster(c)
    _need_two(c, "complete multipartite embodiment")
    vs = _vertices(c)
    edges = [(a, b) for a, b in itertools.combinations(vs, 2) if a.class_index != b.class_index]
    return ColouredGraph.by_class(Graph.build(vs, edges), c)


def thorn_embodiment(c: ColourCluster) -> ColouredGraph:
    """``K_l`` on the representatives with ``r_i - 1`` pendants of colour ``i``.

    Pendants of colour ``i`` hang on ``v_{1,1}``, except colour 1 pendants,
    which hang on ``v_{2,1}``.
    """
    c = parse_cluster(c)
    _need_two(c, "thorn embodiment")
    edges = list(itertools.combinations(representatives(c.ell), 2))
    for i, r in enumerate(c.sizes, start=1):
        hub = v(2, 1) if i == 1 else v(1, 1)
        edges += [(hub, v(i, j)) for j in range(2, r + 1)]
    return ColouredGraph.by_class(Graph.build(_vertices(c), edges), c)


def odd_cycle_embodiment(t: int) -> ColouredGraph:
    """``C_{2t+1}`` coloured 1,2,1,2,...,1,2,3 around the cycle."""
    if t < 2:
        raise ChromaError("requires n ≥ 5")
    seq = [v(k, j) for j in range(1, t + 1) for k in (1, 2)] + [v(3, 1)]
    edges = list(zip(seq, seq[1:] + seq[:1]))
    return ColouredGraph.by_class(Graph.build(seq, edges), ColourCluster((t, t, 1)))


def path_embodiment(sequence: Sequence[VertexLabel]) -> ColouredGraph:
    """Path through ``sequence`` in order, coloured by class index."""
    seq = [VertexLabel(*x) for x in sequence]
    if len(set(seq)) != len(seq):
        raise ChromaError("repeated vertex in path")
    g = Graph.build(seq, zip(seq, seq[1:]))
    return ColouredGraph.from_colouring(g, {x: x.class_index for x in seq})


def path_type_tree(c: ColourCluster) -> ColouredGraph:
    """Greedy proper Hamiltonian path: always take the largest remaining class
    whose colour differs from the previous vertex (ties to the lower colour)."""
    c = parse_cluster(c)
    _need_two(c, "path-type construction")
    remaining = list(c.sizes)
    used = [0] * c.ell
    seq: list[VertexLabel] = []
    last = 0
    for _ in range(c.total):
        choices = [i for i in range(1, c.ell + 1) if i != last and remaining[i - 1] > 0]
        if not choices:
            raise ChromaError("path-type construction failed")
        pick = max(choices, key=lambda i: (remaining[i - 1], -i))
        remaining[pick - 1] -= 1
        used[pick - 1] += 1
        seq.append(v(pick, used[pick - 1]))
        last = pick
    return ColouredGraph.by_class(Graph.build(seq, zip(seq, seq[1:])), c)


def has_rainbow_connected_subgraph(
    cg: ColouredGraph, order_bound: int = RAINBOW_ORDER_BOUND
) -> bool:
    """True iff one vertex per colour can be chosen so the induced subgraph is connected.

    Only subsets hitting every colour exactly once can qualify, so the search
    enumerates one representative per colour class.
    """
    if cg.graph.order > order_bound:
        raise InstanceTooLarge(f"instance too large: order {cg.graph.order} > {order_bound}")
    classes: list[list[VertexLabel]] = [[] for _ in range(cg.ell)]
    for x in cg.graph.sorted_vertices():
        classes[cg.colouring[x] - 1].append(x)
    g = cg.graph
    for pick in itertools.product(*classes):
        if is_connected(g.induced(pick)):
            return True
    return False


_TREES = {"type1": "type1_tree", "type2": "type2_tree"}


def embody(kind: str | EmbodimentKind, cluster: ColourCluster, complete: bool = False) -> ColouredGraph:
    """Build an embodiment by name.

    Accepts the ``EmbodimentKind`` values plus the short forms ``type1``,
    ``type2``, ``multipartite`` and ``null``. ``complete`` applies to the
    Type-I/II trees only.
    """
    name = kind.value if isinstance(kind, EmbodimentKind) else str(kind)
    cluster = parse_cluster(cluster)
    if name in ("type1", "type2", "type1_tree", "type2_tree"):
        base = name[:5]
        tree = globals()[_TREES[base]](cluster)
        return complete_embodiment(tree, base) if complete else tree
    if name in ("type1_complete", "type2_complete"):
        base = name[:5]
        return complete_embodiment(globals()[_TREES[base]](cluster), base)
    if name == "thorn":
        return thorn_embodiment(cluster)
    if name in ("multipartite", "multipartite_max"):
        return multipartite_max(cluster)
    if name == "null":
        return null_embodiment(cluster)
    if name == "path_type":
        return path_type_tree(cluster)
    if name == "odd_cycle":
        s = cluster.sizes
        if len(s) != 3 or s[0] != s[1] or s[2] != 1:
            raise ChromaError("odd_cycle needs a cluster of the form t,t,1")
        return odd_cycle_embodiment(s[0])
    raise ChromaError(f"unknown embodiment kind {name!r}")
