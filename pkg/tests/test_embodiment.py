import itertools
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given

from chroma.chromatic import chromatic_number_exact, colour_weights, is_proper
from chroma.cluster import ColourCluster
from chroma.embodiment import (
    complete_embodiment,
    embody,
    has_rainbow_connected_subgraph,
    multipartite_max,
    null_embodiment,
    odd_cycle_embodiment,
    path_embodiment,
    path_type_tree,
    thorn_embodiment,
    type1_tree,
    type2_tree,
)
from chroma.errors import ChromaError, InstanceTooLarge
from chroma.graph import graph_stats, is_triangle_free, v

from conftest import clusters

C = ColourCluster

# Explicit interleaved path for the cluster (6,4,3,2).
PATH_6432 = [
    v(1, 1), v(2, 1), v(1, 2), v(2, 2), v(1, 3), v(2, 3), v(1, 4), v(2, 4),
    v(1, 5), v(3, 1), v(1, 6), v(3, 2), v(4, 1), v(3, 3), v(4, 2),
]


def nxg(cg):
    h = nx.Graph()
    h.add_nodes_from(cg.graph.vertices)
    h.add_edges_from(cg.graph.edges)
    return h


def edge_set(*pairs):
    return {tuple(sorted(p)) for p in pairs}


def test_type1_small():
    assert type1_tree(C((2, 1))).graph.edges == edge_set((v(1, 1), v(2, 1)), (v(1, 2), v(2, 1)))
    assert type1_tree(C((1, 1))).graph.edges == edge_set((v(1, 1), v(2, 1)))
    g = type1_tree(C((5, 4, 3, 3))).graph
    assert (g.order, g.size) == (15, 14)


def test_type2_small():
    assert type2_tree(C((2, 2, 1))).graph.edges == edge_set(
        (v(1, 1), v(2, 1)), (v(1, 1), v(2, 2)), (v(2, 1), v(3, 1)), (v(2, 1), v(1, 2))
    )
    assert type2_tree(C((2, 1))).graph.edges == edge_set((v(1, 2), v(2, 1)), (v(2, 1), v(1, 1)))
    g = type2_tree(C((5, 4, 3, 3))).graph
    assert (g.order, g.size) == (15, 14)


@pytest.mark.parametrize("fn", [type1_tree, type2_tree, multipartite_max, thorn_embodiment, path_type_tree])
def test_need_two_classes(fn):
    with pytest.raises(ChromaError, match="ℓ ≥ 2"):
        fn(C((3,)))


def test_completion_examples():
    t = type1_tree(C((2, 1)))
    assert complete_embodiment(t, "type1") == t
    assert complete_embodiment(type1_tree(C((5, 4, 3, 3))), "type1").graph.size == 17
    k3 = complete_embodiment(type2_tree(C((1, 1, 1))), "type2")
    assert k3.graph == multipartite_max(C((1, 1, 1))).graph


def test_completion_requires_tree():
    with pytest.raises(ChromaError, match="not a Type-I/II tree"):
        complete_embodiment(null_embodiment(C((3,))), "type1")


def test_null():
    k1 = null_embodiment(C((1,)))
    assert (k1.graph.order, k1.graph.size) == (1, 0)
    g = null_embodiment(C((4,))).graph
    assert (g.order, g.size) == (4, 0)
    with pytest.raises(ChromaError, match="not a single-class cluster"):
        null_embodiment(C((2, 1)))


def test_multipartite_examples():
    assert multipartite_max(C((1, 1))).graph.size == 1
    c4 = nxg(multipartite_max(C((2, 2))))
    assert nx.is_isomorphic(c4, nx.cycle_graph(4))
    assert nx.is_isomorphic(nxg(multipartite_max(C((1, 1, 1)))), nx.complete_graph(3))


def test_thorn_examples():
    assert thorn_embodiment(C((1, 1, 1))).graph == multipartite_max(C((1, 1, 1))).graph
    p3 = thorn_embodiment(C((2, 1)))
    assert p3.graph.edges == edge_set((v(1, 1), v(2, 1)), (v(2, 1), v(1, 2)))
    g = thorn_embodiment(C((5, 4, 3, 3))).graph
    assert (g.order, g.size) == (15, 17)


def test_odd_cycles():
    c5 = odd_cycle_embodiment(2)
    assert nx.is_isomorphic(nxg(c5), nx.cycle_graph(5))
    assert colour_weights(odd_cycle_embodiment(3)) == [3, 3, 1]
    with pytest.raises(ChromaError, match="n ≥ 5"):
        odd_cycle_embodiment(1)


def _colour_sequence(cg):
    h = nxg(cg)
    ends = [x for x in h if h.degree(x) <= 1]
    order = nx.shortest_path(h, ends[0], ends[-1]) if len(ends) == 2 else list(h)
    return [cg.colouring[x] for x in order], h


def test_path_type_examples():
    cg = path_type_tree(C((6, 4, 3, 2)))
    seq, h = _colour_sequence(cg)
    assert len(seq) == 15 and nx.is_isomorphic(h, nx.path_graph(15))
    assert all(a != b for a, b in zip(seq, seq[1:]))
    assert path_type_tree(C((2, 1))).graph.order == 3
    with pytest.raises(ChromaError, match="path-type construction failed"):
        path_type_tree(C((5, 1)))


def proper_arrangement_exists(sizes):
    """Brute force over distinct orderings of the colour multiset."""
    multiset = [i for i, r in enumerate(sizes, start=1) for _ in range(r)]
    return any(all(a != b for a, b in zip(p, p[1:])) for p in set(itertools.permutations(multiset)))


@given(clusters(ell_max=3, size_max=3))
def test_path_type_greedy_fails_only_when_impossible(c):
    possible = proper_arrangement_exists(c.sizes)
    try:
        cg = path_type_tree(c)
    except ChromaError:
        assert not possible
    else:
        assert possible
        assert is_proper(cg.graph, cg.colouring)
        assert colour_weights(cg) == list(c.sizes)


def brute_rainbow(cg):
    h = nxg(cg)
    for sub in itertools.combinations(sorted(h), cg.ell):
        if len({cg.colouring[x] for x in sub}) == cg.ell and nx.is_connected(h.subgraph(sub)):
            return True
    return False


def test_rainbow_explicit_6432_path():
    cg = path_embodiment(PATH_6432)
    assert colour_weights(cg) == [6, 4, 3, 2]
    assert is_proper(cg.graph, cg.colouring)
    assert has_rainbow_connected_subgraph(cg) is False
    assert brute_rainbow(cg) is False


@given(clusters(ell_max=4, size_max=3))
def test_rainbow_trees_true(c):
    for cg in (type1_tree(c), type2_tree(c)):
        assert has_rainbow_connected_subgraph(cg)


@given(clusters(ell_max=3, size_max=3))
def test_rainbow_matches_brute_force_on_paths(c):
    try:
        cg = path_type_tree(c)
    except ChromaError:
        return
    assert has_rainbow_connected_subgraph(cg) == brute_rainbow(cg)


def test_rainbow_guard():
    with pytest.raises(InstanceTooLarge):
        has_rainbow_connected_subgraph(type1_tree(C((6, 6, 6, 6))))


@given(clusters(size_max=3))
def test_trees_are_minimal(c):
    for cg in (type1_tree(c), type2_tree(c)):
        s = graph_stats(cg.graph)
        assert nx.is_tree(nxg(cg))
        assert s.size == c.total - 1
        assert is_proper(cg.graph, cg.colouring)
        assert colour_weights(cg) == list(c.sizes)


@given(clusters(size_max=3))
def test_type2_backbone(c):
    g = type2_tree(c).graph
    assert all(g.has_edge(v(i, 1), v(i + 1, 1)) for i in range(1, c.ell))


@given(clusters(ell_max=5, size_max=3))
def test_completion_and_thorn(c):
    ell = c.ell
    full1 = complete_embodiment(type1_tree(c), "type1")
    full2 = complete_embodiment(type2_tree(c), "type2")
    thorn = thorn_embodiment(c)
    top = multipartite_max(c).graph
    assert full1.graph.size - (c.total - 1) == (ell - 1) * (ell - 2) // 2
    assert full2.graph.size - (c.total - 1) == (ell - 1) * (ell - 2) // 2
    assert thorn.graph.size == full1.graph.size
    assert top.size == (c.total**2 - sum(r * r for r in c.sizes)) // 2
    for cg in (full1, full2, thorn):
        assert cg.graph.edges <= top.edges
        assert is_proper(cg.graph, cg.colouring)
        if c.total <= 12:
            assert chromatic_number_exact(cg.graph) == ell


@given(clusters(ell_min=3, ell_max=5, size_max=3))
def test_unique_maximum_clique(c):
    for cg in (
        complete_embodiment(type1_tree(c), "type1"),
        complete_embodiment(type2_tree(c), "type2"),
    ):
        cliques = [q for q in nx.find_cliques(nxg(cg)) if len(q) == c.ell]
        assert len(cliques) == 1
        assert set(cliques[0]) == {v(i, 1) for i in range(1, c.ell + 1)}


@pytest.mark.parametrize("t", range(2, 7))
def test_odd_cycle_properties(t):
    cg = odd_cycle_embodiment(t)
    assert is_triangle_free(cg.graph)
    assert cg.graph.size == cg.graph.order == 2 * t + 1
    assert chromatic_number_exact(cg.graph) == 3


def test_embody_dispatch():
    c = C((3, 2, 2))
    assert embody("type1", c) == type1_tree(c)
    assert embody("type2_complete", c) == complete_embodiment(type2_tree(c), "type2")
    assert embody("odd_cycle", C((3, 3, 1))) == odd_cycle_embodiment(3)
    with pytest.raises(ChromaError):
        embody("odd_cycle", c)
    with pytest.raises(ChromaError):
        embody("nope", c)
