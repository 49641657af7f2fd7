import itertools
import math
import random

import networkx as nx
import pytest

from koebe.admissibility import check_family
from koebe.constructions import (
    WitnessFamily,
    build_witness_families,
    gen_adm_lower,
    gen_grid_coin,
    gen_multigrid_coin,
    gen_square_grid,
    grid_scol_certificate,
    grid_scol_lower_certificate,
    multigrid_wcol_certificate,
    trim_witness,
    validate_witness,
)
from koebe.constructions.adm_lower import build_p_families
from koebe.errors import InputError
from koebe.geometry import contact_graph, koebe_ordering, validate_model
from koebe.graph import ordering_from_ids, trace_faces
from koebe.reach import is_weak_path, sreach_all, wreach_all
from koebe.svg import render_svg


@pytest.mark.parametrize("d, n, large", [(14, 37, 4), (26, 121, 16), (38, 253, 36)])
def test_grid_coin(d, n, large):
    inst = gen_grid_coin(d)
    assert inst.graph.n == n and len(inst.large) == large
    assert validate_model(inst.graph, inst.model).valid
    assert contact_graph(inst.model).edge_set() == inst.graph.edge_set()
    bound, (D, reached) = grid_scol_certificate(inst)
    assert bound == large == ((d - 2) // 6) ** 2
    # Independent cross-check with the all-vertex routine.
    S = sreach_all(inst.graph, koebe_ordering(inst.model), d).sets
    assert set(reached) <= S[D]
    assert max(len(s) for s in S) >= bound


def test_grid_coin_is_planar_embedding():
    g = gen_grid_coin(14).graph
    trace_faces(g)  # Euler check passes
    assert nx.check_planarity(nx.Graph(list(g.edges)))[0]


def test_grid_svg():
    assert render_svg(gen_grid_coin(14).model).count("<circle") == 37


@pytest.mark.parametrize("d", [13, 15, 2])
def test_grid_rejects(d):
    with pytest.raises(InputError):
        gen_grid_coin(d)


def test_multigrid():
    inst = gen_multigrid_coin(28)
    assert inst.graph.n == 532 and len(inst.gadgets) == 14
    assert all(len(gd.large) == 4 and len(gd.vertices) == 38 for gd in inst.gadgets)
    assert validate_model(inst.graph, inst.model).valid
    assert contact_graph(inst.model).edge_set() == inst.graph.edge_set()
    count, paths = multigrid_wcol_certificate(inst)
    assert count == 56
    order = koebe_ordering(inst.model)
    assert all(is_weak_path(inst.graph, order, p, 28) and p[0] == inst.root for p in paths.values())
    W = wreach_all(inst.graph, order, 28).sets
    assert len(W[inst.root]) >= 57
    with pytest.raises(InputError):
        gen_multigrid_coin(16)


@pytest.mark.parametrize("k, n", [(2, 52), (3, 456)])
def test_adm_lower_counts(k, n):
    inst = gen_adm_lower(k)
    assert inst.graph.n == n == (2 ** k - 1) * 4 ** k + 2 ** k
    assert nx.check_planarity(nx.Graph(list(inst.graph.edges)))[0]


@pytest.mark.parametrize("k, cap", [(2, 32), (3, 64), (3, 96)])
def test_witness_families_validate(k, cap):
    inst = gen_adm_lower(k)
    P = build_p_families(inst)
    Q = build_witness_families(inst, P)
    assert len(Q) == 2 ** k
    for fam in list(P.values()) + list(Q.values()):
        assert validate_witness(fam, inst, cap) == []


def test_validate_detects_shared_vertex():
    inst = gen_adm_lower(2)
    fam = next(iter(build_witness_families(inst).values()))
    bad = WitnessFamily("Q", "", [fam.paths[0], fam.paths[0]] + fam.paths[2:], u=fam.u)
    assert any("share" in m for m in validate_witness(bad, inst))


def test_validate_detects_crooked_segment():
    inst = gen_adm_lower(2)
    K = inst.K
    snake = [(0, b) for b in range(K)] + [(1, b) for b in reversed(range(K))]
    seg = tuple(inst.vid("", a, b) for a, b in snake)
    assert len(seg) - 1 == 2 ** (inst.k + 1) - 1
    fam = WitnessFamily("Q", "", [(inst.apex["WW"],) + tuple(inst.side("W", "SW", i) for i in [1]) + seg], u="WW")
    msgs = validate_witness(fam, inst)
    assert any("not straight" in m for m in msgs)


def test_validate_detects_length_and_nonedges():
    inst = gen_adm_lower(2)
    fam = next(iter(build_witness_families(inst).values()))
    longest = max(len(p) for p in fam.paths) - 1
    assert any("length" in m for m in validate_witness(fam, inst, longest - 1))
    bad = WitnessFamily("Q", "", [fam.paths[0][:1] + fam.paths[0][2:]] + fam.paths[1:], u=fam.u)
    assert any("non-edge" in m for m in validate_witness(bad, inst))


@pytest.mark.parametrize("k, d", [(2, 32), (3, 64)])
def test_trim_over_random_orderings(k, d):
    inst = gen_adm_lower(k)
    Q = build_witness_families(inst)
    rng = random.Random(k)
    orders = [ordering_from_ids(range(inst.graph.n))]
    for _ in range(100):
        ids = list(range(inst.graph.n))
        rng.shuffle(ids)
        orders.append(ordering_from_ids(ids))
    for o in orders:
        cert = trim_witness(Q, inst, o, d)
        assert cert.value >= 2 ** k - 1
        assert check_family(inst.graph, o, cert.v, d, cert.paths) == []
        assert max(o.rank[inst.apex[u]] for u in inst.apex) == o.rank[cert.v]


def test_square_grid():
    c4 = gen_square_grid(2)
    assert c4.n == 4 and c4.m == 4 and all(c4.degree(v) == 2 for v in range(4))
    g = gen_square_grid(3)
    assert g.n == 9 and g.m == 12
    assert len(trace_faces(g).faces) == 5


def test_square_grid_certificate_small():
    g = gen_square_grid(3)
    cache = {}
    perms = list(itertools.permutations(range(9)))
    rng = random.Random(0)
    for perm in rng.sample(perms, 3000):
        count, wit = grid_scol_lower_certificate(g, ordering_from_ids(perm), 3, cache)
        assert count >= 2
        # every witness is strongly 7-reachable from the chosen column minimum
        o = ordering_from_ids(perm)
        S = sreach_all(g, o, 7).sets
        assert any(set(wit) <= S[v] for v in range(9))


def test_square_grid_certificate_d10():
    g = gen_square_grid(10)
    rng = random.Random(1)
    cache = {}
    for _ in range(200):
        ids = list(range(100))
        rng.shuffle(ids)
        assert grid_scol_lower_certificate(g, ordering_from_ids(ids), 10, cache)[0] >= math.ceil(10 / 2)
