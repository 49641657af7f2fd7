"""Scaled grid gadgets chained through a row of interface discs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..errors import CertificateError, InputError
from ..geometry import CoinModel, koebe_ordering, validate_model
from ..graph import PlanarGraph
from ..reach import is_weak_path, wreach_of
from .grid import grid_layout, rotation_from_model


@dataclass
class Gadget:
    index: int  # 1-based
    scale: float
    vertices: tuple[int, ...]
    large: tuple[int, ...]
    interface: int
    corner: int  # bottom-right grid disc


@dataclass
class MultigridInstance:
    d: int
    graph: PlanarGraph
    model: CoinModel
    gadgets: list[Gadget] = field(default_factory=list)

    @property
    def root(self) -> int:
        return self.gadgets[0].interface

    @property
    def large(self) -> tuple[int, ...]:
        return tuple(v for gd in self.gadgets for v in gd.large)


def gen_multigrid_coin(d: int) -> MultigridInstance:
    """d/2 gadgets; gadget i is the (d/4)-grid scaled by d^(i-1).

    The first interface is the unit disc at the origin. Each grid sits
    above-left of its interface, whose centre lies 2 * scale straight below
    the bottom-right grid disc.
    """
    if d < 28 or d % 24 != 4:
        raise InputError("multigrid model needs d = 4 mod 24 and d >= 28")
    m = d // 4
    gx, gy, gr, gedges, glarge, ids = grid_layout(m)
    corner_local = ids[(0, m - 1)]
    xs, ys, rs, edges = [], [], [], []
    gadgets = []
    X = 0.0
    prev_iface = None
    for i in range(1, d // 2 + 1):
        s = float(d) ** (i - 1)
        if prev_iface is not None:
            X += rs[prev_iface] + s
        base = len(xs)
        cx, cy = gx[corner_local], gy[corner_local]
        xs += [X + s * (x - cx) for x in gx]
        ys += [s * (y - cy + 2) for y in gy]
        rs += [s * r for r in gr]
        edges += [(base + a, base + b) for a, b in gedges]
        iface = len(xs)
        xs.append(X)
        ys.append(0.0)
        rs.append(s)
        edges.append((base + corner_local, iface))
        if prev_iface is not None:
            edges.append((prev_iface, iface))
        gadgets.append(
            Gadget(i, s, tuple(range(base, iface + 1)), tuple(base + v for v in glarge), iface, base + corner_local)
        )
        prev_iface = iface
    n = len(xs)
    g = PlanarGraph.from_edges(n, edges, rotation_from_model(n, edges, xs, ys))
    model = CoinModel(np.array(xs), np.array(ys), np.array(rs))
    rep = validate_model(g, model)
    if not rep.valid:
        raise CertificateError(
            f"multigrid placement is invalid: {len(rep.overlaps)} overlaps, {len(rep.tangency)} loose edges"
        )
    return MultigridInstance(d, g, model, gadgets)


def multigrid_wcol_certificate(inst: MultigridInstance):
    """Check every large disc is in WReach_d of the first interface; returns (count, witnesses)."""
    order = koebe_ordering(inst.model)
    root = inst.root
    W = wreach_of(inst.graph, order, root, inst.d)
    large = set(inst.large)
    missing = large - W
    if missing:
        raise CertificateError(f"{len(missing)} large discs are not weakly {inst.d}-reachable")
    witnesses = {v: _witness_path(inst, order, root, v) for v in sorted(large)}
    for v, p in witnesses.items():
        if p is None or not is_weak_path(inst.graph, order, p, inst.d):
            raise CertificateError(f"no valid weak path witness for {v}")
    expected = (inst.d // 2) * ((inst.d // 4 - 1) // 3) ** 2
    assert expected == len(large)
    return len(large), witnesses


def _witness_path(inst, order, root, target):
    """Shortest path from root inside {x : x not smaller than target}."""
    rank = order.rank
    rt = rank[target]
    parent = {root: None}
    q = deque([root])
    while q:
        x = q.popleft()
        if x == target:
            break
        for y in inst.graph.adj[x]:
            if y not in parent and rank[y] >= rt:
                parent[y] = x
                q.append(y)
    if target not in parent:
        return None
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))
