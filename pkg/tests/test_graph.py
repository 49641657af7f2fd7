import json

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_graphs
from koebe.errors import InputError
from koebe.families import icosahedron, k3, k4, random_triangulation, wheel
from koebe.graph import (
    PlanarGraph,
    is_triangulation,
    load_graph,
    load_ordering,
    ordering_from_ids,
    trace_faces,
)


def test_load_triangle():
    g = load_graph({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})
    assert g.n == 3 and g.m == 3
    assert g.edge_set() == {(0, 1), (1, 2), (0, 2)}


@pytest.mark.parametrize(
    "doc",
    [
        {"n": 3, "edges": [[0, 0]]},
        {"n": 5, "edges": [[u, v] for u in range(5) for v in range(u + 1, 5)]},
        {"n": 2, "edges": [[0, 1], [1, 0]]},
        {"n": 2, "edges": [[0, 2]]},
        {"edges": []},
        {"n": 2, "edges": [[0, "1"]]},
    ],
)
def test_load_rejects(doc):
    with pytest.raises(InputError):
        load_graph(doc)


def test_load_from_path_and_string(tmp_path):
    doc = k4().to_document()
    p = tmp_path / "k4.json"
    p.write_text(json.dumps(doc))
    assert load_graph(p) == load_graph(json.dumps(doc)) == k4()


def test_faces_k3_k4():
    assert [len(f) for f in trace_faces(k3()).faces] == [3, 3]
    faces = trace_faces(k4()).faces
    assert len(faces) == 4 and all(len(f) == 3 for f in faces)
    assert all(is_triangulation(k4(), i) for i in range(4))


def test_scrambled_rotation_rejected():
    g = k4()
    rot = [list(r) for r in g.rotation]
    rot[0] = [rot[0][1], rot[0][0], rot[0][2]]
    with pytest.raises(InputError):
        trace_faces(PlanarGraph.from_edges(4, g.edges, rot))


def test_c4_and_wheel():
    c4 = PlanarGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)], [(1, 3), (2, 0), (3, 1), (0, 2)])
    faces = trace_faces(c4)
    assert not any(is_triangulation(c4, i, faces) for i in range(len(faces.faces)))
    w = wheel(6)
    faces = trace_faces(w)
    rim = [i for i, f in enumerate(faces.faces) if 0 not in f]
    assert len(rim) == 1 and len(faces.faces[rim[0]]) == 6
    assert is_triangulation(w, rim[0], faces)
    assert not is_triangulation(w, (rim[0] + 1) % len(faces.faces), faces)


@given(st.integers(4, 60), st.integers(0, 10**6))
def test_random_triangulation_is_maximal_planar(n, seed):
    g = random_triangulation(n, seed)
    assert g.m == 3 * n - 6
    faces = trace_faces(g)
    assert len(faces.faces) == 2 * n - 4
    assert all(len(f) == 3 for f in faces.faces)
    assert nx.check_planarity(nx.Graph(list(g.edges)))[0]


def test_icosahedron():
    g = icosahedron()
    assert g.n == 12 and g.m == 30 and {g.degree(v) for v in range(12)} == {5}


def test_ordering_from_ids():
    o = ordering_from_ids([2, 0, 1])
    assert o.rank == (1, 2, 0)
    assert ordering_from_ids(range(4)).rank == (0, 1, 2, 3)
    with pytest.raises(InputError):
        ordering_from_ids([0, 0, 1])
    with pytest.raises(InputError):
        load_ordering({"order": [0]})


@given(small_graphs())
def test_document_round_trip(g):
    assert load_graph(g.to_document()) == g


@given(st.permutations(list(range(8))))
def test_rank_inverts_order(ids):
    o = ordering_from_ids(ids)
    assert all(o.order[o.rank[v]] == v for v in range(8))
