"""d-admissibility of a single vertex.

A family for ``v`` consists of strong reachability paths from ``v`` (internal
vertices larger than ``v``, last vertex smaller) of length at most ``d``,
pairwise disjoint apart from ``v``. With ``strict_length`` every path must
have exactly ``d`` edges instead.

The exact value is found by branch and bound. Upper bounds: the number of
usable first steps, and a vertex-capacitated max flow that ignores lengths.
Lower bounds: a min-cost flow decomposition and a greedy shortest-path
packing.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceeded, InputError
from .flow import disjoint_paths
from .graph import PlanarGraph, VertexOrdering

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class AdmissibilityCertificate:
    v: int
    d: int
    paths: tuple[tuple[int, ...], ...]
    lower: int
    upper: int
    exact: bool

    @property
    def value(self) -> int:
        """Witnessed family size (the optimum when ``exact``)."""
        return len(self.paths)


def check_family(g, order, v, d, paths, strict_length=False) -> list[str]:
    """Problems with ``paths`` as an admissibility family for ``v``; empty if valid."""
    rank = order.rank
    rv = rank[v]
    problems = []
    seen: dict[int, int] = {}
    for i, p in enumerate(paths):
        if len(p) < 2 or p[0] != v:
            problems.append(f"path {i} does not start at {v} or is trivial")
            continue
        if len(set(p)) != len(p):
            problems.append(f"path {i} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                problems.append(f"path {i} uses non-edge {a}-{b}")
        length = len(p) - 1
        if (strict_length and length != d) or length > d:
            problems.append(f"path {i} has length {length} (d={d})")
        if rank[p[-1]] >= rv:
            problems.append(f"path {i} ends at {p[-1]} which is not smaller than {v}")
        if any(rank[x] <= rv for x in p[1:-1]):
            problems.append(f"path {i} has an internal vertex not larger than {v}")
        for x in p[1:]:
            if x in seen:
                problems.append(f"paths {seen[x]} and {i} share vertex {x}")
            seen[x] = i
    return problems


class _Search:
    def __init__(self, g, rank, v, d, strict, budget):
        self.adj = g.adj
        self.rank = rank
        self.v = v
        self.rv = rank[v]
        self.d = d
        self.strict = strict
        self.budget = budget
        self.expansions = 0
        self.best: list[tuple[int, ...]] = []

    def tick(self):
        self.expansions += 1
        if self.expansions > self.budget:
            raise BudgetExceeded(
                f"admissibility search for vertex {self.v} exceeded {self.budget} expansions"
            )

    def is_target(self, x):
        return self.rank[x] < self.rv

    def is_inner(self, x):
        return self.rank[x] > self.rv

    def target_distance(self, used) -> dict[int, int]:
        """Edges from each free inner vertex to the nearest free target."""
        adj, dist = self.adj, {}
        q = deque()
        for x in self.region_targets:
            if x not in used:
                dist[x] = 0
                q.append(x)
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist and y not in used and y in self.region:
                    dist[y] = dist[x] + 1
                    q.append(y)
        return dist

    def flow_bound(self, starts, used) -> int:
        allowed = [x for x in self.region if x not in used]
        targets = [x for x in self.region_targets if x not in used]
        return len(disjoint_paths(self.adj, (), targets, allowed, hub=self.v, starts=starts))

    def paths_from(self, first, used, dist_t):
        """Yield valid paths ``v, first, ...`` through free vertices, shortest first-ish."""
        d, adj = self.d, self.adj
        if self.is_target(first):
            if not self.strict or d == 1:
                yield (self.v, first)
            return
        if first not in dist_t or 1 + dist_t[first] > d:
            return
        stack_path = [self.v, first]
        on_path = {first}

        def rec():
            self.tick()
            x = stack_path[-1]
            depth = len(stack_path) - 1
            nbrs = sorted(
                (y for y in adj[x] if y not in used and y not in on_path and y != self.v),
                key=lambda y: dist_t.get(y, 1 << 20),
            )
            for y in nbrs:
                if self.is_target(y):
                    if not self.strict or depth + 1 == d:
                        yield tuple(stack_path) + (y,)
                elif y in self.region and depth + 1 + dist_t.get(y, 1 << 20) <= d:
                    stack_path.append(y)
                    on_path.add(y)
                    yield from rec()
                    on_path.discard(y)
                    stack_path.pop()

        yield from rec()

    def run(self, starts, chosen, used, idx):
        self.tick()
        if len(self.best) >= self.cap:
            return
        if len(chosen) > len(self.best):
            self.best = list(chosen)
        remaining = [x for x in starts[idx:] if x not in used]
        if len(chosen) + len(remaining) <= len(self.best):
            return
        if len(chosen) + self.flow_bound(remaining, used) <= len(self.best):
            return
        if idx >= len(starts):
            return
        first = starts[idx]
        if first not in used:
            dist_t = self.target_distance(used)
            for p in self.paths_from(first, used, dist_t):
                new = set(p[1:])
                chosen.append(p)
                self.run(starts, chosen, used | new, idx + 1)
                chosen.pop()
                if len(self.best) >= self.cap:
                    return
        self.run(starts, chosen, used, idx + 1)


def adm_vertex(
    g: PlanarGraph,
    order: VertexOrdering,
    d: int,
    v: int,
    mode: str = "exact",
    strict_length: bool = False,
    budget: int | None = None,
) -> AdmissibilityCertificate:
    if d < 1:
        raise InputError("admissibility needs d >= 1")
    if mode not in ("exact", "bounds"):
        raise InputError(f"unknown admissibility mode {mode!r}")
    budget = DEFAULT_BUDGET if budget is None else budget
    rank = order.rank
    s = _Search(g, rank, v, d, strict_length, budget)

    # Inner vertices within d-1 steps of v; only they can lie on a family path.
    region = {v: 0}
    q = deque([v])
    while q:
        x = q.popleft()
        if region[x] == d - 1:
            continue
        for y in g.adj[x]:
            if y not in region and s.is_inner(y):
                region[y] = region[x] + 1
                q.append(y)
    del region[v]
    s.region = set(region)
    s.region_targets = {y for x in list(region) + [v] for y in g.adj[x] if s.is_target(y)}

    upper_paths = disjoint_paths(g.adj, (), s.region_targets, s.region, hub=v)
    upper = len(upper_paths)

    if strict_length:
        lower_family = [p for p in upper_paths if len(p) - 1 == d]
    elif mode == "bounds":
        lower_family = _greedy(s)
    else:
        mc = disjoint_paths(g.adj, (), s.region_targets, s.region, hub=v, min_cost=True)
        lower_family = [p for p in mc if len(p) - 1 <= d]
        greedy = _greedy(s)
        if len(greedy) > len(lower_family):
            lower_family = greedy
    lower_family = [tuple(p) for p in lower_family]

    if mode == "bounds" or len(lower_family) == upper:
        return AdmissibilityCertificate(
            v, d, tuple(lower_family), len(lower_family), upper, len(lower_family) == upper
        )

    s.best = list(lower_family)
    s.cap = upper
    chosen: list[tuple[int, ...]] = []
    used: set[int] = set()
    starts = [y for y in g.adj[v] if y in s.region or y in s.region_targets]
    if not strict_length:
        # A direct edge to a smaller neighbour can always replace whichever
        # path would otherwise end there.
        for y in starts:
            if s.is_target(y):
                chosen.append((v, y))
                used.add(y)
        starts = [y for y in starts if not s.is_target(y)]
    starts.sort(key=lambda y: (region.get(y, 0), y))
    s.run(starts, chosen, frozenset(used), 0)
    best = tuple(s.best)
    return AdmissibilityCertificate(v, d, best, len(best), upper, True)


def _greedy(s: _Search) -> list[tuple[int, ...]]:
    """Repeatedly take a shortest valid path through unused vertices."""
    used: set[int] = set()
    out = []
    while True:
        parent = {s.v: None}
        q = deque([(s.v, 0)])
        found = None
        while q and found is None:
            x, dx = q.popleft()
            if dx == s.d:
                continue
            for y in s.adj[x]:
                if y in parent or y in used:
                    continue
                if s.is_target(y):
                    parent[y] = x
                    found = y
                    break
                if y in s.region:
                    parent[y] = x
                    q.append((y, dx + 1))
        if found is None:
            return out
        p = [found]
        while parent[p[-1]] is not None:
            p.append(parent[p[-1]])
        p.reverse()
        out.append(tuple(p))
        used.update(p[1:])
