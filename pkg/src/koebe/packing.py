"""Circle packing of triangulated discs: radii by angle-sum iteration, then layout.

The outer face carries prescribed radii; every other face must be a
triangle. Radii are found with the uniform-neighbour update (each interior
radius is replaced by the one that would give angle sum 2 pi if all its
neighbours had a common radius), swept simultaneously. Once the defect is
small a Newton step on log-radii finishes the job quadratically.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import ConvergenceError, InputError
from .geometry import CoinModel, ToleranceConfig, tangency_residuals, validate_model
from .graph import FaceSet, PlanarGraph, is_triangulation, rotation_from_triangles, trace_faces

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-10
    max_iter: int = 100_000
    damping: float = 1.0
    newton_switch: float = 1e-2  # start Newton once the max defect is below this
    oscillation_window: int = 10

    def __post_init__(self):
        if self.tol <= 0:
            raise InputError("angle tolerance must be positive")
        if not 0 < self.damping <= 1:
            raise InputError("damping must lie in (0, 1]")
        if self.max_iter < 1:
            raise InputError("max_iter must be positive")


@dataclass
class PackingProblem:
    graph: PlanarGraph
    faces: FaceSet
    outer: int
    boundary_radii: dict[int, float]

    @classmethod
    def build(cls, g: PlanarGraph, outer: int | None = None, boundary_radii=None) -> "PackingProblem":
        if g.rotation is None:
            raise InputError("packing needs a rotation system")
        if not g.is_connected():
            raise InputError("packing needs a connected graph")
        faces = trace_faces(g)
        if outer is None:
            outer = 0
        if not is_triangulation(g, outer, faces):
            raise InputError("graph is not a triangulation with the given outer face")
        bverts = list(dict.fromkeys(faces.faces[outer]))
        if boundary_radii is None:
            boundary_radii = {v: 1.0 for v in bverts}
        elif not isinstance(boundary_radii, dict):
            boundary_radii = dict(zip(bverts, boundary_radii))
        if set(boundary_radii) != set(bverts):
            raise InputError("boundary radii must be given for exactly the outer-face vertices")
        if any(not r > 0 for r in boundary_radii.values()):
            raise InputError("boundary radii must be positive")
        return cls(g, faces, outer, {int(k): float(v) for k, v in boundary_radii.items()})

    @property
    def boundary(self) -> list[int]:
        return list(dict.fromkeys(self.faces.faces[self.outer]))

    def triangles(self) -> np.ndarray:
        tris = [f for i, f in enumerate(self.faces.faces) if i != self.outer]
        return np.array(tris, dtype=np.int64).reshape(-1, 3)


@dataclass
class PackingSolution:
    radii: np.ndarray
    centers: np.ndarray | None = None
    angle_residual: float = math.inf
    tangency_residual: float = math.inf
    iterations: int = 0
    newton_steps: int = 0
    history: list[float] = field(default_factory=list, repr=False)


def _corner_angles(tris: np.ndarray, r: np.ndarray):
    """Angles at the three corners of each triangle of tangent discs."""
    x, y, z = r[tris[:, 0]], r[tris[:, 1]], r[tris[:, 2]]
    a, b, c = y + z, x + z, x + y  # sides opposite corners 0, 1, 2

    def ang(opp, s1, s2):
        return np.arccos(np.clip((s1 * s1 + s2 * s2 - opp * opp) / (2 * s1 * s2), -1.0, 1.0))

    return ang(a, b, c), ang(b, a, c), ang(c, a, b)


def angle_sums(tris: np.ndarray, r: np.ndarray) -> np.ndarray:
    n = len(r)
    a0, a1, a2 = _corner_angles(tris, r)
    return (
        np.bincount(tris[:, 0], a0, n) + np.bincount(tris[:, 1], a1, n) + np.bincount(tris[:, 2], a2, n)
    )


def _jacobian(tris, r, interior_idx, n):
    """d(angle sum)/d(log r) restricted to interior vertices (sparse)."""
    rows, cols, vals = [], [], []
    x, y, z = r[tris[:, 0]], r[tris[:, 1]], r[tris[:, 2]]
    sides = (y + z, x + z, x + y)
    angles = _corner_angles(tris, r)
    cos = [np.cos(t) for t in angles]
    area2 = sides[1] * sides[2] * np.sin(angles[0])  # twice the area
    rad = (x, y, z)
    for k in range(3):  # corner whose angle is differentiated
        a_opp = sides[k]
        i, j = (k + 1) % 3, (k + 2) % 3
        # With a the side opposite this corner and B, C the other corners:
        # dA/dr_self = -a (cos B + cos C) / 2Area, dA/dr_B = a (1 - cos B) / 2Area.
        d_self = -a_opp * (cos[i] + cos[j]) / area2 * rad[k]
        d_i = a_opp * (1 - cos[i]) / area2 * rad[i]
        d_j = a_opp * (1 - cos[j]) / area2 * rad[j]
        for other, dv in ((k, d_self), (i, d_i), (j, d_j)):
            rows.append(tris[:, k])
            cols.append(tris[:, other])
            vals.append(dv)
    J = sp.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n)
    )
    return J[interior_idx][:, interior_idx]


def solve_radii(p: PackingProblem, cfg: SolverConfig | None = None) -> PackingSolution:
    cfg = cfg or SolverConfig()
    n = p.graph.n
    tris = p.triangles()
    r = np.ones(n)
    is_b = np.zeros(n, dtype=bool)
    for v, rv in p.boundary_radii.items():
        r[v] = rv
        is_b[v] = True
    interior = np.flatnonzero(~is_b)
    sol = PackingSolution(r)
    if len(interior) == 0:
        sol.angle_residual = 0.0
        return sol
    scale = float(np.mean(list(p.boundary_radii.values())))
    r[interior] = scale
    k = np.array([p.graph.degree(v) for v in interior], dtype=float)
    delta = np.sin(math.pi / k)
    damping = cfg.damping
    worse_run = 0
    prev = math.inf
    it = 0
    while it < cfg.max_iter:
        theta = angle_sums(tris, r)[interior]
        err = float(np.max(np.abs(theta - TWO_PI)))
        sol.history.append(err)
        if err <= cfg.tol:
            # Polish towards machine precision: the layout compounds angle
            # errors along long face chains, so spare accuracy is cheap insurance.
            for _ in range(3):
                r_new = _newton_step(tris, r, interior, theta, n)
                if r_new is None:
                    break
                r = r_new
                sol.newton_steps += 1
                theta = angle_sums(tris, r)[interior]
                err = float(np.max(np.abs(theta - TWO_PI)))
            break
        if err < cfg.newton_switch:
            r_new = _newton_step(tris, r, interior, theta, n)
            if r_new is not None:
                r = r_new
                sol.newton_steps += 1
                it += 1
                continue
        worse_run = worse_run + 1 if err > prev else 0
        if worse_run >= cfg.oscillation_window:
            damping /= 2
            worse_run = 0
        prev = err
        beta = np.sin(theta / (2 * k))
        target = r[interior] * beta / (1 - beta) * (1 - delta) / delta
        r[interior] += damping * (target - r[interior])
        it += 1
    else:
        theta = angle_sums(tris, r)[interior]
        err = float(np.max(np.abs(theta - TWO_PI)))
        if err > cfg.tol:
            raise ConvergenceError(
                f"angle sums did not converge in {cfg.max_iter} iterations (defect {err:.3e})"
            )
    sol.radii = r
    sol.iterations = it
    sol.angle_residual = err
    return sol


def _newton_step(tris, r, interior, theta, n):
    """One damped Newton step on log-radii; None when it fails to reduce the defect."""
    F = theta - TWO_PI
    J = _jacobian(tris, r, interior, n)
    try:
        step = spla.spsolve(J.tocsc(), -F)
    except RuntimeError:
        return None
    if not np.all(np.isfinite(step)):
        return None
    base = float(np.max(np.abs(F)))
    t = 1.0
    for _ in range(30):
        cand = r.copy()
        cand[interior] = r[interior] * np.exp(t * step)
        new = float(np.max(np.abs(angle_sums(tris, cand)[interior] - TWO_PI)))
        if new < base:
            return cand
        t /= 2
    return None


def _third_center(pu, pv, ru, rv, rw):
    """Center of disc w tangent to u and v, on the right of the directed line u -> v."""
    dx, dy = pv[0] - pu[0], pv[1] - pu[1]
    duv = math.hypot(dx, dy)
    a, b = ru + rw, rv + rw
    # Law of cosines for the angle at u.
    cos_u = max(-1.0, min(1.0, (a * a + duv * duv - b * b) / (2 * a * duv)))
    sin_u = math.sqrt(max(0.0, 1 - cos_u * cos_u))
    ex, ey = dx / duv, dy / duv
    # Rotating (ex, ey) clockwise by angle u puts w on the right.
    wx = ex * cos_u + ey * sin_u
    wy = -ex * sin_u + ey * cos_u
    return (pu[0] + a * wx, pu[1] + a * wy)


def layout(p: PackingProblem, radii) -> np.ndarray:
    """Centres from radii by walking interior faces breadth-first.

    The first boundary edge lies on the x-axis and the third vertex of the
    face across it gets positive y. Interior faces then run clockwise.
    """
    r = np.asarray(radii, dtype=float)
    n = p.graph.n
    faces = p.faces.faces
    outer = faces[p.outer]
    b0, b1 = outer[0], outer[1]
    pos: dict[int, tuple[float, float]] = {b0: (0.0, 0.0), b1: (r[b0] + r[b1], 0.0)}
    dart_face = p.faces.face_of_dart()
    start = dart_face[(b1, b0)]
    placed_faces = set()
    q = deque([start])
    queued = {start}
    while q:
        f = q.popleft()
        cyc = faces[f]
        missing = [v for v in cyc if v not in pos]
        if len(missing) > 1:
            raise InputError("face traversal reached a face with two unplaced vertices")
        if missing:
            i = cyc.index(missing[0])
            u, v = cyc[(i + 1) % 3], cyc[(i + 2) % 3]
            pos[missing[0]] = _third_center(pos[u], pos[v], r[u], r[v], r[missing[0]])
        placed_faces.add(f)
        for i in range(len(cyc)):
            a, b = cyc[i], cyc[(i + 1) % len(cyc)]
            g = dart_face[(b, a)]
            if g != p.outer and g not in queued:
                queued.add(g)
                q.append(g)
    if len(pos) != n:
        raise InputError("face traversal did not reach every vertex")
    return np.array([pos[v] for v in range(n)])


def pack(
    g: PlanarGraph,
    outer: int | None = None,
    cfg: SolverConfig | None = None,
    boundary_radii=None,
    tol: ToleranceConfig | None = None,
) -> tuple[CoinModel, PackingSolution]:
    """Coin model of a triangulation; raises if the result fails validation."""
    cfg = cfg or SolverConfig()
    prob = PackingProblem.build(g, outer, boundary_radii)
    sol = solve_radii(prob, cfg)
    centers = layout(prob, sol.radii)
    sol.centers = centers
    model = CoinModel(centers[:, 0], centers[:, 1], sol.radii, tol or ToleranceConfig())
    sol.tangency_residual = float(tangency_residuals(g, model).max()) if g.m else 0.0
    rep = validate_model(g, model)
    if not rep.valid:
        raise ConvergenceError(
            f"packed model failed validation: {len(rep.overlaps)} overlaps, "
            f"{len(rep.tangency)} loose edges (worst {sol.tangency_residual:.3e})"
        )
    return model, sol


def stellate(g: PlanarGraph, outer: int | None = None) -> tuple[PlanarGraph, list[int]]:
    """Triangulate by adding one new vertex inside every non-triangular face.

    Returns the augmented graph and the list of added (auxiliary) vertex ids.
    Faces whose boundary repeats a vertex are rejected; the outer face is
    kept as is when ``outer`` is given.
    """
    faces = trace_faces(g)
    tris = []
    added = []
    n = g.n
    for i, f in enumerate(faces.faces):
        if len(f) == 3 or i == outer:
            tris.append(tuple(f))
            continue
        if len(set(f)) != len(f):
            raise InputError("cannot stellate a face whose boundary repeats a vertex")
        c = n + len(added)
        added.append(c)
        for j in range(len(f)):
            tris.append((f[j], f[(j + 1) % len(f)], c))
    total = n + len(added)
    edges = set(g.edges)
    for t in tris:
        for j in range(len(t)):
            a, b = t[j], t[(j + 1) % len(t)]
            edges.add((min(a, b), max(a, b)))
    return PlanarGraph.from_edges(total, sorted(edges), rotation_from_triangles(total, tris)), added


def pack_planar(g: PlanarGraph, cfg: SolverConfig | None = None) -> CoinModel:
    """Coin model of a 2-connected embedded planar graph via stellation.

    The auxiliary discs are dropped; contacts of the original edges remain.
    """
    aug, added = stellate(g)
    model, _ = pack(aug, 0, cfg)
    keep = g.n
    return CoinModel(model.x[:keep], model.y[:keep], model.r[:keep], model.tol)
