"""The d x d grid and its strong-coloring lower-bound certificate."""
from __future__ import annotations

import math

from ..errors import CertificateError, InputError
from ..flow import disjoint_paths
from ..graph import PlanarGraph
from ..reach import strong_distances


def gen_square_grid(d: int) -> PlanarGraph:
    """Row-major ids: vertex (row, col) is row * d + col."""
    if d < 2:
        raise InputError("grid side must be >= 2")
    edges = []
    for r in range(d):
        for c in range(d):
            v = r * d + c
            if c + 1 < d:
                edges.append((v, v + 1))
            if r + 1 < d:
                edges.append((v, v + d))
    # Counter-clockwise rotation with rows growing upwards: E, N, W, S.
    rot = []
    for r in range(d):
        for c in range(d):
            v = r * d + c
            nb = []
            if c + 1 < d:
                nb.append(v + 1)
            if r + 1 < d:
                nb.append(v + d)
            if c > 0:
                nb.append(v - 1)
            if r > 0:
                nb.append(v - d)
            rot.append(tuple(nb))
    return PlanarGraph.from_edges(d * d, edges, rot)


def grid_scol_lower_certificate(g: PlanarGraph, order, d: int | None = None, flow_cache: dict | None = None):
    """Constructive lower bound on |SReach_{3d-2}[u_k]| for the d x d grid.

    ``order`` only needs a ``rank`` sequence. Returns (count, witnesses) where
    witnesses maps each verified w(P) to its path P. ``flow_cache`` may be
    shared across orderings: the Menger family depends only on (k, U).
    """
    if d is None:
        d = math.isqrt(g.n)
    if d * d != g.n:
        raise InputError("not a square grid")
    rank = order.rank
    cols = [[r * d + c for r in range(d)] for c in range(d)]
    U = [min(col, key=rank.__getitem__) for col in cols]
    k = max(range(d), key=lambda c: rank[U[c]])
    uk = U[k]
    C = cols[k]
    key = (k, tuple(U))
    paths = None if flow_cache is None else flow_cache.get(key)
    if paths is None:
        paths = disjoint_paths(g.adj, C, U)
        if len(paths) < d:
            raise CertificateError(f"only {len(paths)} disjoint C-U paths in the {d}x{d} grid")
        paths = [tuple(p) for p in paths if len(p) <= 2 * d]
        if flow_cache is not None:
            flow_cache[key] = paths
    cmin = rank[uk]  # the column minimum of C
    dist = strong_distances(g, order, uk, 3 * d - 2)
    witnesses = {}
    for p in paths:
        w = next(x for x in p if rank[x] <= cmin)
        if w in dist:
            witnesses[w] = p
    count = len(witnesses)
    if count < math.ceil(d / 2):
        raise CertificateError(f"only {count} verified witnesses, expected at least {math.ceil(d / 2)}")
    return count, witnesses
