"""Weak and strong reachability sets and the coloring numbers built on them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import PlanarGraph, VertexOrdering


@dataclass(frozen=True)
class ReachSets:
    kind: str  # "weak" or "strong"
    d: int
    sets: tuple[frozenset[int], ...]

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.sets[v]

    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]


def _bounded_bfs(adj, start: int, depth: int, ok) -> dict[int, int]:
    """Distances from ``start`` up to ``depth`` using only vertices with ``ok(x)``."""
    dist = {start: 0}
    q = deque([start])
    while q:
        x = q.popleft()
        dx = dist[x]
        if dx == depth:
            continue
        for y in adj[x]:
            if y not in dist and ok(y):
                dist[y] = dx + 1
                q.append(y)
    return dist


def wreach_all(g: PlanarGraph, order: VertexOrdering, d: int) -> ReachSets:
    """WReach_d[v] for every v.

    For each ``u`` we search from ``u`` inside the vertices not smaller than
    ``u``; every vertex met within ``d`` steps weakly reaches ``u``.
    """
    rank = order.rank
    sets: list[set[int]] = [set() for _ in range(g.n)]
    for u in order.order:
        ru = rank[u]
        for v in _bounded_bfs(g.adj, u, d, lambda x: rank[x] >= ru):
            sets[v].add(u)
    return ReachSets("weak", d, tuple(frozenset(s) for s in sets))


def strong_distances(g: PlanarGraph, order: VertexOrdering, v: int, max_d: int) -> dict[int, int]:
    """Shortest strong reachability path length from ``v`` to each reachable smaller vertex.

    Includes ``v`` itself at distance 0.
    """
    rank = order.rank
    rv = rank[v]
    inner = _bounded_bfs(g.adj, v, max_d - 1, lambda x: rank[x] > rv) if max_d >= 1 else {v: 0}
    out = {v: 0}
    for x, dx in inner.items():
        for y in g.adj[x]:
            if rank[y] < rv:
                cand = dx + 1
                if cand <= max_d and cand < out.get(y, cand + 1):
                    out[y] = cand
    return out


def sreach_all(g: PlanarGraph, order: VertexOrdering, d: int) -> ReachSets:
    sets = tuple(frozenset(strong_distances(g, order, v, d)) for v in range(g.n))
    return ReachSets("strong", d, sets)


def sreach_of(g, order, v, d) -> frozenset[int]:
    return frozenset(strong_distances(g, order, v, d))


def wreach_of(g: PlanarGraph, order: VertexOrdering, v: int, d: int) -> frozenset[int]:
    """WReach_d[v] for a single root."""
    rank = order.rank
    rv = rank[v]
    near = _bounded_bfs(g.adj, v, d, lambda x: True)
    out = {v}
    for u in near:
        ru = rank[u]
        if ru >= rv:
            continue
        if v in _bounded_bfs(g.adj, u, d, lambda x: rank[x] >= ru):
            out.add(u)
    return frozenset(out)


def reach_size_profile(g: PlanarGraph, order: VertexOrdering, ds: Sequence[int], kind: str) -> dict[int, list[int]]:
    """Per-vertex reach-set sizes for several radii from one search per vertex.

    ``kind`` is "weak" or "strong" ("wcol" and "scol" are accepted too).
    """
    kind = {"wcol": "weak", "scol": "strong"}.get(kind, kind)
    ds = sorted(ds)
    top = ds[-1]
    sizes = {d: [0] * g.n for d in ds}
    if kind == "strong":
        for v in range(g.n):
            dist = strong_distances(g, order, v, top)
            for d in ds:
                sizes[d][v] = sum(1 for x in dist.values() if x <= d)
        return sizes
    if kind == "weak":
        rank = order.rank
        for u in order.order:
            ru = rank[u]
            for v, dv in _bounded_bfs(g.adj, u, top, lambda x: rank[x] >= ru).items():
                for d in ds:
                    if dv <= d:
                        sizes[d][v] += 1
        return sizes
    raise ValueError(f"unknown reach kind {kind!r}")


def is_weak_path(g: PlanarGraph, order: VertexOrdering, path: Sequence[int], d: int | None = None) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    if d is not None and len(path) - 1 > d:
        return False
    rank = order.rank
    end = rank[path[-1]]
    return end <= rank[path[0]] and all(rank[x] >= end for x in path)


def is_strong_path(g: PlanarGraph, order: VertexOrdering, path: Sequence[int], d: int | None = None) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    if d is not None and len(path) - 1 > d:
        return False
    rank = order.rank
    start = rank[path[0]]
    return rank[path[-1]] <= start and all(rank[x] > start for x in path[1:-1])


@dataclass(frozen=True)
class MetricReport:
    kind: str  # wcol | scol | adm
    d: int
    values: tuple[int, ...]
    value: int
    argmax: int | None

    @classmethod
    def from_values(cls, kind, d, values):
        values = tuple(values)
        if not values:
            return cls(kind, d, values, 0, None)
        arg = max(range(len(values)), key=lambda i: (values[i], -i))
        return cls(kind, d, values, values[arg], arg)

    def csv_rows(self):
        rows = [(v, x) for v, x in enumerate(self.values)]
        return rows


def metric_of_ordering(
    g: PlanarGraph,
    order: VertexOrdering,
    d: int,
    kind: str,
    mode: str = "exact",
    strict_length: bool = False,
    budget: int | None = None,
) -> MetricReport:
    """wcol / scol / adm of an ordering with per-vertex values.

    For ``kind="adm"`` with ``mode="bounds"`` the per-vertex values are the
    flow upper bounds.
    """
    if kind == "wcol":
        vals = wreach_all(g, order, d).sizes()
    elif kind == "scol":
        vals = sreach_all(g, order, d).sizes()
    elif kind == "adm":
        from .admissibility import adm_vertex

        vals = []
        for v in range(g.n):
            cert = adm_vertex(g, order, d, v, mode=mode, strict_length=strict_length, budget=budget)
            vals.append(cert.value if mode == "exact" else cert.upper)
    else:
        raise ValueError(f"unknown metric kind {kind!r}")
    return MetricReport.from_values(kind, d, vals)
