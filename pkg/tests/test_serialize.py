import json

import pytest
from hypothesis import given

from chroma.cluster import ColourCluster, apply_colour_map
from chroma.embodiment import embody, null_embodiment, type1_tree
from chroma.errors import ChromaError
from chroma.serialize import from_dot, from_json, to_csv, to_dot, to_json

from conftest import clusters

KINDS = ["type1_tree", "type2_tree", "type1_complete", "type2_complete", "thorn", "multipartite_max"]


@given(clusters(ell_max=4, size_max=3))
def test_dot_round_trip(c):
    for kind in KINDS:
        cg = embody(kind, c)
        assert from_dot(to_dot(cg)) == cg
        assert from_json(to_json(cg)) == cg


def test_dot_round_trip_after_recolouring():
    cg = apply_colour_map(type1_tree(ColourCluster((3, 2, 1))), (3, 1, 2))
    back = from_dot(to_dot(cg))
    assert back == cg


def test_dot_shape():
    text = to_dot(type1_tree(ColourCluster((2, 1))))
    assert text.startswith("graph G {")
    assert 'v_1_1 [colour=1, label="v_1_1"];' in text
    assert "v_1_1 -- v_2_1;" in text


def test_json_shape():
    data = json.loads(to_json(null_embodiment(ColourCluster((1,)))))
    assert data == {"cluster": [1], "vertices": [{"class": 1, "ordinal": 1}], "edges": [], "colouring": {"v_1_1": 1}}


def test_csv_lists_isolated_vertices():
    text = to_csv(null_embodiment(ColourCluster((2,))))
    assert text.splitlines() == ["u,v,colour_u,colour_v", "v_1_1,,1,", "v_1_2,,1,"]


def test_bad_dot():
    with pytest.raises(ChromaError):
        from_dot("digraph G { a -> b; }")
    with pytest.raises(ChromaError):
        from_dot("graph G {\n  v_1_1;\n}\n")
