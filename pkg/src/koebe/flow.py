"""Vertex-capacitated max flow on undirected graphs (Menger path systems).

Each graph vertex ``x`` is split into ``in(x) -> out(x)`` with capacity one.
Augmentation is breadth-first (Edmonds-Karp); ``min_cost=True`` switches to
successive shortest paths with unit edge costs, which makes the decomposed
paths as short as possible in total.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

_INF = 1 << 30


class _Network:
    def __init__(self, num_nodes: int):
        self.head: list[list[int]] = [[] for _ in range(num_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add(self, u: int, v: int, cap: int, cost: int = 0) -> int:
        e = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.head[u].append(e)
        self.head[v].append(e + 1)
        return e

    def _bfs_path(self, s: int, t: int):
        parent = [-1] * len(self.head)
        parent[s] = -2
        q = deque([s])
        while q:
            x = q.popleft()
            for e in self.head[x]:
                if self.cap[e] > 0:
                    y = self.to[e]
                    if parent[y] == -1:
                        parent[y] = e
                        if y == t:
                            return parent
                        q.append(y)
        return None

    def _spfa_path(self, s: int, t: int):
        n = len(self.head)
        dist = [_INF] * n
        parent = [-1] * n
        inq = [False] * n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            inq[x] = False
            dx = dist[x]
            for e in self.head[x]:
                if self.cap[e] > 0:
                    y = self.to[e]
                    nd = dx + self.cost[e]
                    if nd < dist[y]:
                        dist[y] = nd
                        parent[y] = e
                        if not inq[y]:
                            inq[y] = True
                            q.append(y)
        return parent if dist[t] < _INF else None

    def run(self, s: int, t: int, min_cost: bool = False, limit: int = _INF) -> int:
        flow = 0
        find = self._spfa_path if min_cost else self._bfs_path
        while flow < limit:
            parent = find(s, t)
            if parent is None:
                break
            y = t
            while y != s:
                e = parent[y]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                y = self.to[e ^ 1]
            flow += 1
        return flow


def disjoint_paths(
    adj: Sequence[Sequence[int]],
    sources: Iterable[int],
    targets: Iterable[int],
    allowed: Iterable[int] | None = None,
    hub: int | None = None,
    min_cost: bool = False,
    limit: int | None = None,
    starts: Iterable[int] | None = None,
) -> list[list[int]]:
    """Maximum family of vertex-disjoint source-to-target paths.

    With ``hub`` set, every path starts at ``hub`` (which has unbounded
    capacity) and ``sources`` is ignored. Internal vertices are drawn from
    ``allowed`` (default: every vertex); ``starts`` optionally restricts the
    second vertex of hub paths. Targets are never used as internal
    vertices. A vertex that is both a source and a target yields a
    one-vertex path.
    """
    targets = set(targets)
    sources = set() if hub is not None else set(sources)
    inner = set(range(len(adj))) if allowed is None else set(allowed)
    nodes = inner | targets | sources
    if hub is not None:
        nodes.discard(hub)
    if not min_cost:
        if hub is not None:
            first = [y for y in adj[hub] if y in nodes and (starts is None or y in set(starts))]
        else:
            first = sorted(sources)
        return _augment(adj, nodes, targets, first, hub, _INF if limit is None else limit)
    # Local ids: vertex x becomes in = 2 * idx[x], out = 2 * idx[x] + 1.
    verts = sorted(nodes)
    idx = {x: i for i, x in enumerate(verts)}
    S, T = 2 * len(verts), 2 * len(verts) + 1
    net = _Network(2 * len(verts) + 2)
    for i in range(len(verts)):
        net.add(2 * i, 2 * i + 1, 1)
    if hub is not None:
        first = adj[hub] if starts is None else set(starts) & set(adj[hub])
        for y in first:
            if y in idx:
                net.add(S, 2 * idx[y], 1, 1)
    else:
        for x in sources:
            net.add(S, 2 * idx[x], 1)
    for x in targets:
        if x in idx:
            net.add(2 * idx[x] + 1, T, 1)
    for x in verts:
        if x in targets:
            continue
        ox = 2 * idx[x] + 1
        for y in adj[x]:
            j = idx.get(y)
            if j is not None:
                net.add(ox, 2 * j, 1, 1)
    value = net.run(S, T, min_cost=min_cost, limit=_INF if limit is None else limit)
    if value == 0:
        return []

    # Decompose: follow saturated forward arcs (even edge ids with residual 0).
    used_out: dict[int, list[int]] = {}
    for u in range(len(net.head)):
        for e in net.head[u]:
            if e % 2 == 0 and net.cap[e] == 0:
                used_out.setdefault(u, []).append(net.to[e])
    paths = []
    for _ in range(value):
        node = used_out[S].pop()
        path = [] if hub is None else [hub]
        while node != T:
            i = node // 2
            path.append(verts[i])
            node = used_out[2 * i + 1].pop()
            # The only arc out of in(x) is in(x) -> out(x).
        paths.append(path)
    return paths


_S, _T = -1, -2


def _augment(adj, nodes, targets, first, hub, limit):
    """Edmonds-Karp on the implicit split graph; flow is kept as pred/succ maps."""
    pred: dict[int, int] = {}
    succ: dict[int, int] = {}
    flow = 0
    while flow < limit:
        # States are (x, 0) for in(x) and (x, 1) for out(x).
        parent: dict[tuple[int, int], tuple[int, int] | None] = {}
        q = deque()
        for y in first:
            if pred.get(y) != _S and (y, 0) not in parent:
                parent[(y, 0)] = None
                q.append((y, 0))
        end = None
        while q and end is None:
            state = q.popleft()
            x, side = state
            if side == 0:
                if x not in pred:
                    nxt = [(x, 1)]
                else:
                    p = pred[x]
                    nxt = [] if p == _S else [(p, 1)]
            else:
                nxt = [(x, 0)] if x in pred else []
                if x in targets:
                    if succ.get(x) != _T:
                        end = state
                        break
                else:
                    nxt += [(y, 0) for y in adj[x] if y in nodes and succ.get(x) != y]
            for st in nxt:
                if st not in parent:
                    parent[st] = state
                    q.append(st)
        if end is None:
            break
        states = [end]
        while parent[states[-1]] is not None:
            states.append(parent[states[-1]])
        states.reverse()
        add, drop = [(_S, states[0][0])], []
        for (a, sa), (b, sb) in zip(states, states[1:]):
            if sa == 1 and sb == 0:
                add.append((a, b))
            elif sa == 0 and sb == 1 and a != b:
                drop.append((b, a))
        add.append((end[0], _T))
        for a, b in drop:
            if succ.get(a) == b:
                del succ[a]
            if pred.get(b) == a:
                del pred[b]
        for a, b in add:
            if a != _S:
                succ[a] = b
            if b != _T:
                pred[b] = a
        flow += 1
    paths = []
    for y in first:
        if pred.get(y) != _S:
            continue
        path = [] if hub is None else [hub]
        x = y
        while x != _T:
            path.append(x)
            x = succ[x]
        paths.append(path)
    return paths


def max_flow_value(adj, sources, targets, allowed=None, hub=None, limit=None, starts=None) -> int:
    return len(disjoint_paths(adj, sources, targets, allowed, hub, False, limit, starts))
