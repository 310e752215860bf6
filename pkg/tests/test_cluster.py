import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chroma.chromatic import colour_weights, is_proper
from chroma.cluster import (
    ColourCluster,
    ColouredGraph,
    PermutationMap,
    apply_colour_map,
    canonicalize,
    parse_cluster,
)
from chroma.embodiment import multipartite_max, type2_tree
from chroma.errors import ChromaError
from chroma.generators import random_coloured_graph
from chroma.graph import Graph, v

from conftest import clusters


@pytest.mark.parametrize(
    "text, sizes",
    [("5,4,3,3", (5, 4, 3, 3)), ("1", (1,)), ("[3, 2]", (3, 2)), ('{"classes":[5,4,3,3]}', (5, 4, 3, 3))],
)
def test_parse_cluster(text, sizes):
    assert parse_cluster(text).sizes == sizes


@pytest.mark.parametrize("text, msg", [("3,0", "invalid class size"), ("", "empty cluster"), ("2,x", "invalid class size"), ("2,-1", "invalid"), ("[]", "empty")])
def test_parse_cluster_errors(text, msg):
    with pytest.raises(ChromaError, match=msg):
        parse_cluster(text)


def test_canonicalize_examples():
    c, m = canonicalize(ColourCluster((3, 5, 4)))
    assert c.sizes == (5, 4, 3)
    assert m.image == (3, 1, 2)
    assert canonicalize(ColourCluster((5, 4, 3, 3)))[1].is_identity()
    assert canonicalize(ColourCluster((2, 2)))[1].is_identity()


@given(clusters(ell_min=1))
def test_canonicalize_properties(c):
    s, m = canonicalize(c)
    assert s.is_non_increasing()
    assert canonicalize(s) == (s, PermutationMap.identity(c.ell))
    # the map carries each class to where its size ended up
    for i, r in enumerate(c.sizes, start=1):
        assert s.sizes[m(i) - 1] == r


@pytest.mark.parametrize("image", [(1, 1, 2), (0, 1), (1, 2, 4), ()])
def test_invalid_permutation(image):
    if image == ():
        PermutationMap(())  # empty map on zero colours is legal
        return
    with pytest.raises(ChromaError, match="invalid permutation"):
        PermutationMap(image)


def test_apply_wrong_length():
    cg = multipartite_max(ColourCluster((1, 1, 1)))
    with pytest.raises(ChromaError, match="invalid permutation"):
        apply_colour_map(cg, (2, 1))


def test_identity_map_is_noop():
    cg = type2_tree(ColourCluster((3, 2, 2)))
    assert apply_colour_map(cg, PermutationMap.identity(3)) == cg


def test_reverse_on_triangle():
    cg = multipartite_max(ColourCluster((1, 1, 1)))
    out = apply_colour_map(cg, (3, 2, 1))
    assert [out.colouring[v(i, 1)] for i in (1, 2, 3)] == [3, 2, 1]


def test_swap_on_p3():
    centre, a, b = v(2, 1), v(1, 1), v(1, 2)
    g = Graph.build([centre, a, b], [(a, centre), (centre, b)])
    cg = ColouredGraph.by_class(g, ColourCluster((2, 1)))
    out = apply_colour_map(cg, (2, 1))
    assert out.colouring[centre] == 1 and out.colouring[a] == out.colouring[b] == 2
    # adjacency check by hand: both edges join colours 1 and 2
    assert all({out.colouring[x], out.colouring[y]} == {1, 2} for x, y in g.edges)
    assert out.cluster.sizes == (1, 2)


def test_cluster_must_match_weights():
    g = Graph.build([v(1, 1), v(2, 1)])
    with pytest.raises(ChromaError):
        ColouredGraph.by_class(g, ColourCluster((2,)))


perms = st.integers(1, 5).flatmap(lambda n: st.permutations(range(1, n + 1)).map(lambda p: PermutationMap(tuple(p))))


@given(clusters(ell_min=1, ell_max=5), st.data(), st.randoms(use_true_random=False))
def test_apply_colour_map_properties(c, data, rnd):
    cg = random_coloured_graph(c, rnd, p=0.5)
    m1 = PermutationMap(tuple(data.draw(st.permutations(range(1, c.ell + 1)))))
    m2 = PermutationMap(tuple(data.draw(st.permutations(range(1, c.ell + 1)))))
    out = apply_colour_map(cg, m1)
    assert out.graph == cg.graph
    w, w2 = colour_weights(cg), colour_weights(out)
    assert all(w2[m1(i) - 1] == w[i - 1] for i in range(1, c.ell + 1))
    assert is_proper(out.graph, out.colouring) == is_proper(cg.graph, cg.colouring)
    assert apply_colour_map(out, m2) == apply_colour_map(cg, m1.then(m2))
    assert apply_colour_map(out, m1.inverse()) == cg


def test_then_composition_order():
    a = PermutationMap((2, 3, 1))
    b = PermutationMap((1, 3, 2))
    # a first: 1->2, then b: 2->3
    assert a.then(b)(1) == 3
    for i in range(1, 4):
        assert a.then(b)(i) == b(a(i))
