import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koebe.errors import ConvergenceError, InputError
from koebe.families import icosahedron, k3, k4, random_triangulation, wheel
from koebe.geometry import contact_graph, tangency_residuals, validate_model
from koebe.graph import PlanarGraph, trace_faces
from koebe.packing import (
    PackingProblem,
    SolverConfig,
    _corner_angles,
    _jacobian,
    angle_sums,
    pack,
    pack_planar,
    solve_radii,
    stellate,
)


def descartes_inner(k1, k2, k3_):
    return 1 / (k1 + k2 + k3_ + 2 * math.sqrt(k1 * k2 + k2 * k3_ + k1 * k3_))


def test_k4_descartes():
    model, sol = pack(k4())
    assert abs(min(model.r) - descartes_inner(1, 1, 1)) <= 1e-12
    assert sol.tangency_residual <= 1e-8


@pytest.mark.parametrize("radii", [(1.0, 2.0, 3.0), (0.5, 4.0, 1.0)])
def test_k4_descartes_unequal(radii):
    p = PackingProblem.build(k4(), 0, list(radii))
    sol = solve_radii(p)
    inner = [v for v in range(4) if v not in p.boundary][0]
    rb = [p.boundary_radii[v] for v in p.boundary]
    assert abs(sol.radii[inner] - descartes_inner(*(1 / r for r in rb))) <= 1e-10


def test_wheel_hub():
    w = wheel(6)
    rim = next(i for i, f in enumerate(trace_faces(w).faces) if 0 not in f)
    model, _ = pack(w, rim)
    assert abs(model.r[0] - 1) <= 1e-12


def test_k3_equilateral():
    model, sol = pack(k3())
    assert np.allclose(model.r, 1)
    d = [math.hypot(model.x[u] - model.x[v], model.y[u] - model.y[v]) for u, v in k3().edges]
    assert np.allclose(d, 2, atol=1e-12)


def test_icosahedron():
    model, sol = pack(icosahedron())
    assert tangency_residuals(icosahedron(), model).max() <= 1e-8
    assert validate_model(icosahedron(), model).valid


def test_not_a_triangulation():
    c4 = PlanarGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)], [(1, 3), (2, 0), (3, 1), (0, 2)])
    with pytest.raises(InputError):
        pack(c4)
    with pytest.raises(InputError):
        pack(PlanarGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))  # no rotation


def test_iteration_cap():
    with pytest.raises(ConvergenceError):
        pack(random_triangulation(300, 1), cfg=SolverConfig(max_iter=3, newton_switch=1e-30))


def test_tighter_tolerance_shrinks_residual():
    g = random_triangulation(60, 2)
    loose = solve_radii(PackingProblem.build(g), SolverConfig(tol=1e-4, newton_switch=1e-30))
    tight = solve_radii(PackingProblem.build(g), SolverConfig(tol=1e-12))
    assert tight.angle_residual <= 1e-12 < loose.angle_residual or tight.angle_residual < loose.angle_residual


@settings(max_examples=15)
@given(st.integers(4, 150), st.integers(0, 10**6))
def test_random_triangulations_pack(n, seed):
    g = random_triangulation(n, seed)
    model, sol = pack(g)
    assert validate_model(g, model).valid
    assert contact_graph(model).edge_set() >= g.edge_set()
    p = PackingProblem.build(g)
    interior = [v for v in range(n) if v not in p.boundary]
    sums = angle_sums(p.triangles(), sol.radii)
    assert np.abs(sums[interior] - 2 * math.pi).max() <= 1e-9


def test_jacobian_matches_finite_differences():
    g = random_triangulation(30, 5)
    p = PackingProblem.build(g)
    tris = p.triangles()
    rng = np.random.default_rng(0)
    r = rng.uniform(0.5, 2, g.n)
    J = _jacobian(tris, r, np.arange(g.n), g.n)
    J = J.toarray() if hasattr(J, "toarray") else np.asarray(J)
    h = 1e-6
    for v in rng.choice(g.n, 5, replace=False):
        e = np.zeros(g.n)
        e[v] = h
        fd = (angle_sums(tris, r * np.exp(e)) - angle_sums(tris, r * np.exp(-e))) / (2 * h)
        assert np.allclose(J[:, v], fd, atol=1e-6)


def test_corner_angles_sum_to_pi():
    tris = np.array([[0, 1, 2]])
    a = _corner_angles(tris, np.array([1.0, 2.0, 3.0]))
    assert abs(sum(x[0] for x in a) - math.pi) <= 1e-12


def test_stellate_and_pack_planar():
    c5 = PlanarGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)],
                                [((i + 1) % 5, (i - 1) % 5) for i in range(5)])
    aug, added = stellate(c5, outer=0)
    assert len(added) == 1 and aug.m == 10
    model = pack_planar(c5)
    assert model.n == 5 and validate_model(c5, model).valid
