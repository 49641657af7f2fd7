"""Unit-disc grid with 2x2 blocks merged into discs of radius sqrt(10) - 1."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import CertificateError, InputError
from ..geometry import CoinModel, contact_graph, koebe_ordering, validate_model
from ..graph import PlanarGraph
from ..reach import sreach_of

BIG = math.sqrt(10) - 1


@dataclass
class GridCoinInstance:
    d: int
    graph: PlanarGraph
    model: CoinModel
    large: tuple[int, ...]


def rotation_from_model(n, edges, x, y):
    """Counter-clockwise neighbour order around each disc centre."""
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return [
        tuple(sorted(nb, key=lambda w: math.atan2(y[w] - y[v], x[w] - x[v]))) for v, nb in enumerate(nbrs)
    ]


def grid_layout(m: int):
    """Discs and contacts of the m x m pattern (m = 3T + 1), bottom-left centre at the origin.

    Returns (x, y, r, edges, large, corner) where ``corner`` maps (row, col)
    of surviving unit discs to ids. Rows and columns are 0-based; blocks sit
    on index pairs (3t + 1, 3t + 2), i.e. every index congruent to 1 mod 3
    is a street.
    """
    if m % 3 != 1:
        raise InputError("grid side must be 1 mod 3")
    T = (m - 1) // 3
    in_block = lambda i: i % 3 != 0  # noqa: E731
    ids: dict[tuple[int, int], int] = {}
    xs, ys, rs = [], [], []
    for row in range(m):
        for col in range(m):
            if in_block(row) and in_block(col):
                continue
            ids[(row, col)] = len(xs)
            xs.append(2.0 * col)
            ys.append(2.0 * row)
            rs.append(1.0)
    edges = []
    for (row, col), v in ids.items():
        for dr, dc in ((0, 1), (1, 0)):
            w = ids.get((row + dr, col + dc))
            if w is not None:
                edges.append((v, w))
    large = []
    for tr in range(T):
        for tc in range(T):
            v = len(xs)
            r0, c0 = 3 * tr + 1, 3 * tc + 1
            xs.append(2.0 * c0 + 1)
            ys.append(2.0 * r0 + 1)
            rs.append(BIG)
            large.append(v)
            # Two unit neighbours on each side of the block.
            for cell in (
                (r0 - 1, c0), (r0 - 1, c0 + 1), (r0 + 2, c0), (r0 + 2, c0 + 1),
                (r0, c0 - 1), (r0 + 1, c0 - 1), (r0, c0 + 2), (r0 + 1, c0 + 2),
            ):
                edges.append((ids[cell], v))
    return xs, ys, rs, edges, large, ids


def gen_grid_coin(d: int) -> GridCoinInstance:
    if d < 14 or d % 12 != 2:
        raise InputError("grid coin model needs d = 2 mod 12 and d >= 14")
    xs, ys, rs, edges, large, _ = grid_layout(d // 2)
    n = len(xs)
    g = PlanarGraph.from_edges(n, edges, rotation_from_model(n, edges, xs, ys))
    model = CoinModel(np.array(xs), np.array(ys), np.array(rs))
    inst = GridCoinInstance(d, g, model, tuple(large))
    _audit(inst)
    return inst


def _audit(inst):
    rep = validate_model(inst.graph, inst.model)
    if not rep.valid:
        raise CertificateError(f"generated grid model is invalid: {rep}")
    if contact_graph(inst.model).edge_set() != inst.graph.edge_set():
        raise CertificateError("contact graph differs from the generated graph")


def grid_scol_certificate(inst: GridCoinInstance):
    """(((d-2)/6)^2, (D, large discs)) after checking each large disc is in SReach_d[D]."""
    order = koebe_ordering(inst.model)
    large = set(inst.large)
    D = next(v for v in order.order if v not in large)
    S = sreach_of(inst.graph, order, D, inst.d)
    missing = large - S
    if missing:
        raise CertificateError(f"large discs {sorted(missing)} are not strongly {inst.d}-reachable")
    bound = ((inst.d - 2) // 6) ** 2
    assert bound == len(large)
    return bound, (D, tuple(sorted(large)))
