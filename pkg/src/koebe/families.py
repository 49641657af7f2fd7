"""Small embedded graph families used by tests, suites and the CLI."""
from __future__ import annotations

import numpy as np
from scipy.spatial import ConvexHull, Delaunay

from .graph import PlanarGraph, rotation_from_triangles


def _ccw(points, tri):
    a, b, c = (points[i] for i in tri)
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0


def from_triangles(n: int, triangles) -> PlanarGraph:
    edges = set()
    for t in triangles:
        for i in range(3):
            u, v = t[i], t[(i + 1) % 3]
            edges.add((min(u, v), max(u, v)))
    return PlanarGraph.from_edges(n, sorted(edges), rotation_from_triangles(n, triangles))


def random_triangulation(n: int, seed: int = 0) -> PlanarGraph:
    """Maximal planar graph on ``n`` vertices.

    ``n - 1`` uniform random points are Delaunay-triangulated and the last
    vertex ``n - 1`` is joined to every hull vertex, closing the sphere.
    """
    if n < 4:
        raise ValueError("random_triangulation needs n >= 4")
    rng = np.random.default_rng(seed)
    pts = rng.random((n - 1, 2))
    tris = []
    for s in Delaunay(pts).simplices:
        t = tuple(int(x) for x in s)
        tris.append(t if _ccw(pts, t) else (t[0], t[2], t[1]))
    darts = set()
    for a, b, c in tris:
        darts.update(((a, b), (b, c), (c, a)))
    apex = n - 1
    for a, b in list(darts):
        if (b, a) not in darts:
            tris.append((b, a, apex))
    return from_triangles(n, tris)


def convex_polyhedron(points) -> PlanarGraph:
    """Graph of a simplicial convex polytope in R^3 (faces oriented outward)."""
    pts = np.asarray(points, dtype=float)
    hull = ConvexHull(pts)
    centroid = pts.mean(axis=0)
    tris = []
    for s in hull.simplices:
        a, b, c = (int(x) for x in s)
        normal = np.cross(pts[b] - pts[a], pts[c] - pts[a])
        if np.dot(normal, pts[a] - centroid) < 0:
            b, c = c, b
        tris.append((a, b, c))
    return from_triangles(len(pts), tris)


def icosahedron() -> PlanarGraph:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            pts += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    return convex_polyhedron(pts)


def k4() -> PlanarGraph:
    """Tetrahedron; vertex 3 sits inside the triangle 0, 1, 2."""
    return from_triangles(4, [(0, 1, 3), (1, 2, 3), (2, 0, 3), (0, 2, 1)])


def k3() -> PlanarGraph:
    return PlanarGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)], [(1, 2), (2, 0), (0, 1)])


def wheel(k: int) -> PlanarGraph:
    """Hub 0 and rim 1..k; the rim is the only non-triangular face."""
    rim = list(range(1, k + 1))
    tris = [(0, rim[i], rim[(i + 1) % k]) for i in range(k)]
    g = from_triangles(k + 1, tris)
    return g


def cycle(k: int) -> PlanarGraph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    rot = [((i - 1) % k, (i + 1) % k) for i in range(k)]
    return PlanarGraph.from_edges(k, edges, rot)


def path(k: int) -> PlanarGraph:
    return PlanarGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star(leaves: int) -> PlanarGraph:
    """Centre ``leaves``; leaves ``0..leaves-1``."""
    return PlanarGraph.from_edges(leaves + 1, [(i, leaves) for i in range(leaves)])
