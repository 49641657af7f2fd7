"""Minimising a coloring number over all vertex orderings (desk scale)."""
from __future__ import annotations

import math
import random
from collections import deque
from types import SimpleNamespace

from .errors import InputError
from .graph import PlanarGraph, VertexOrdering, ordering_from_ids
from .reach import metric_of_ordering, strong_distances

EXHAUSTIVE_MAX_N = 10


def _split_rank(n, v, above):
    rank = [0] * n
    rank[v] = 1
    for x in above:
        rank[x] = 2
    return SimpleNamespace(rank=rank)


def _local_cost(g, d, kind, v, above):
    """scol / adm value of ``v`` given the set of vertices placed after it."""
    pseudo = _split_rank(g.n, v, above)
    if kind == "scol":
        return len(strong_distances(g, pseudo, v, d))
    from .admissibility import adm_vertex

    return adm_vertex(g, pseudo, d, v).value


def _exhaustive_split(g, d, kind):
    # best[mask] = min over orderings of the vertices in mask (all placed after
    # everything outside mask) of the largest local cost among them.
    n = g.n
    full = (1 << n) - 1
    best = {0: (0, None)}
    for mask in sorted(range(1, full + 1), key=lambda m: bin(m).count("1")):
        cand = None
        for v in range(n):
            if mask >> v & 1:
                rest = mask & ~(1 << v)
                above = [x for x in range(n) if rest >> x & 1]
                c = max(_local_cost(g, d, kind, v, above), best[rest][0])
                if cand is None or c < cand[0]:
                    cand = (c, v)
        best[mask] = cand
    order, mask = [], full
    while mask:
        v = best[mask][1]
        order.append(v)
        mask &= ~(1 << v)
    return best[full][0], ordering_from_ids(order)


def _exhaustive_wcol(g, d):
    n = g.n
    best = [n + 1, None]
    counts = [0] * n
    order: list[int] = []
    remaining = set(range(n))

    def ball(u):
        dist = {u: 0}
        q = deque([u])
        while q:
            x = q.popleft()
            if dist[x] == d:
                continue
            for y in g.adj[x]:
                if y not in dist and y in remaining:
                    dist[y] = dist[x] + 1
                    q.append(y)
        return dist

    def rec(current):
        if not remaining:
            if current < best[0]:
                best[0], best[1] = current, list(order)
            return
        for u in sorted(remaining):
            reach = ball(u)
            for x in reach:
                counts[x] += 1
            worst = max(current, max(counts[x] for x in reach))
            if worst < best[0]:
                remaining.discard(u)
                order.append(u)
                rec(worst)
                order.pop()
                remaining.add(u)
            for x in reach:
                counts[x] -= 1

    rec(0)
    return best[0], ordering_from_ids(best[1])


def graph_min_metric(
    g: PlanarGraph,
    d: int,
    kind: str,
    strategy: str = "exhaustive",
    seed: int = 0,
    iterations: int = 2000,
) -> tuple[int, VertexOrdering]:
    """Minimum (exhaustive) or best-found (anneal) value of ``kind`` over orderings."""
    if kind not in ("wcol", "scol", "adm"):
        raise InputError(f"unknown metric kind {kind!r}")
    if g.n == 0:
        return (0 if kind == "adm" else 0), ordering_from_ids([])
    if strategy == "exhaustive":
        if g.n > EXHAUSTIVE_MAX_N:
            raise InputError(f"exhaustive search is limited to n <= {EXHAUSTIVE_MAX_N}")
        if kind == "wcol":
            return _exhaustive_wcol(g, d)
        return _exhaustive_split(g, d, kind)
    if strategy == "anneal":
        return _anneal(g, d, kind, seed, iterations)
    raise InputError(f"unknown strategy {strategy!r}")


def _anneal(g, d, kind, seed, iterations):
    rng = random.Random(seed)
    ids = list(range(g.n))
    rng.shuffle(ids)

    def score(ids):
        return metric_of_ordering(g, ordering_from_ids(ids), d, kind).value

    cur = score(ids)
    best, best_ids = cur, list(ids)
    t0 = 1.0
    for it in range(iterations):
        if g.n < 2:
            break
        temp = t0 * (1 - it / iterations) + 1e-3
        i, j = rng.sample(range(g.n), 2)
        ids[i], ids[j] = ids[j], ids[i]
        new = score(ids)
        if new <= cur or rng.random() < math.exp((cur - new) / temp):
            cur = new
            if new < best:
                best, best_ids = new, list(ids)
        else:
            ids[i], ids[j] = ids[j], ids[i]
    return best, ordering_from_ids(best_ids)
