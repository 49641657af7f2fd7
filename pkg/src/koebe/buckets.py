"""Radius buckets around a root disc, accessibility between buckets, greedy index traces."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import CertificateError, InputError
from .geometry import CoinModel, is_normalized
from .graph import PlanarGraph, VertexOrdering
from .reach import is_weak_path, wreach_of

SNAP = 1e-9


def bucket_index(r: float, d: int) -> int:
    """The i with d^(3i) <= r < d^(3i+3); radii within relative 1e-9 of d^(3i) go to bucket i."""
    if not r > 0:
        raise InputError("radius must be positive")
    if d < 2:
        raise InputError("buckets need d >= 2")
    step = 3 * math.log(d)
    i = math.floor(math.log(r) / step)
    # Repair floating log near exact powers, in both directions.
    if r >= math.exp((i + 1) * step) * (1 - SNAP):
        i += 1
    elif r < math.exp(i * step) * (1 - SNAP):
        i -= 1
    return i


@dataclass(frozen=True)
class BucketPartition:
    d: int
    index: tuple[int, ...]  # bucket of each vertex

    def members(self, i: int) -> list[int]:
        return [v for v, b in enumerate(self.index) if b == i]

    def nonempty(self) -> list[int]:
        return sorted(set(self.index))


def bucket_partition(model: CoinModel, d: int, root: int) -> BucketPartition:
    if not is_normalized(model, root, 1e-9):
        raise InputError("model must be normalised at the root (unit disc at the origin)")
    part = BucketPartition(d, tuple(bucket_index(float(r), d) for r in model.r))
    assert part.index[root] == 0
    return part


@dataclass
class WReachBucketHistogram:
    root: int
    d: int
    counts: dict[int, int]
    witnesses: list[tuple[int, float, float]]  # (w, r, a)
    violations: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def wreach_bucket_histogram(
    g: PlanarGraph, model: CoinModel, order: VertexOrdering, d: int, u: int, eps: float = 1e-9
) -> WReachBucketHistogram:
    """Counts of WReach_d[u] per bucket, plus the per-vertex radius/distance checks."""
    part = bucket_partition(model, d, u)
    W = wreach_of(g, order, u, d)
    counts: dict[int, int] = {}
    for w in W:
        counts[part.index[w]] = counts.get(part.index[w], 0) + 1
    wit, bad = [], []
    for w in sorted(W - {u}):
        r = float(model.r[w])
        a = math.hypot(model.x[w], model.y[w])
        wit.append((w, r, a))
        if a < (1 + r) * (1 - eps):
            bad.append(f"vertex {w}: a={a!r} < 1 + r = {1 + r!r}")
        if a > 2 * d * r * (1 + eps):
            bad.append(f"vertex {w}: a={a!r} > 2dr = {2 * d * r!r}")
    return WReachBucketHistogram(u, d, dict(sorted(counts.items())), wit, bad)


class BucketAnalysis:
    """Shared state for the accessibility relation rooted at ``u``."""

    def __init__(self, g: PlanarGraph, model: CoinModel, order: VertexOrdering, d: int, u: int):
        self.g, self.model, self.order, self.d, self.u = g, model, order, d, u
        self.part = bucket_partition(model, d, u)
        self.W = wreach_of(g, order, u, d)
        self._cache: dict[tuple[int, int], tuple[bool, tuple[int, ...] | None]] = {}

    @property
    def top(self) -> int:
        return max(self.part.index)

    def occupied(self) -> list[int]:
        """L: non-negative bucket indices meeting WReach_d[u]."""
        return sorted({self.part.index[w] for w in self.W if self.part.index[w] >= 0})

    def _search(self, ok, target_ok, endpoint_rank=None):
        """BFS from u inside ``ok`` to depth d; returns parents and first-hit order of targets."""
        adj, rank, d = self.g.adj, self.order.rank, self.d
        parent = {self.u: None}
        dist = {self.u: 0}
        hits = []
        q = deque([self.u])
        while q:
            x = q.popleft()
            if dist[x] == d:
                continue
            for y in adj[x]:
                if y in dist:
                    continue
                if endpoint_rank is not None and rank[y] < endpoint_rank:
                    continue
                if target_ok(y):
                    parent[y] = x
                    dist[y] = dist[x] + 1
                    hits.append(y)
                elif ok(y):
                    parent[y] = x
                    dist[y] = dist[x] + 1
                    q.append(y)
        return parent, hits

    def accessible(self, i: int, j: int) -> tuple[bool, tuple[int, ...] | None]:
        if not j > i >= 0:
            raise InputError("need j > i >= 0")
        key = (i, j)
        if key in self._cache:
            return self._cache[key]
        idx, rank = self.part.index, self.order.rank
        ru = rank[self.u]
        in_low = lambda x: idx[x] <= i  # noqa: E731
        in_j = lambda x: idx[x] == j  # noqa: E731
        # Cheap filter ignoring the rank condition, then the literal check per endpoint.
        result: tuple[bool, tuple[int, ...] | None] = (False, None)
        for w in self._candidates(in_low, in_j):
            if rank[w] > ru:
                continue
            rw = rank[w]
            ok = lambda x: (in_low(x) or in_j(x)) and rank[x] >= rw  # noqa: E731
            parent, _ = self._search(ok, lambda x: False)
            if w in parent:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                result = (True, tuple(path))
                break
        self._cache[key] = result
        return result

    def _candidates(self, in_low, in_j):
        """B_j vertices reachable within d steps through the allowed buckets, nearest first."""
        parent, _ = self._search(lambda x: in_low(x) or in_j(x), lambda x: False)
        return [x for x in parent if in_j(x)]

    def max_accessible(self, i: int, below: int | None = None) -> int | None:
        hi = self.top if below is None else below - 1
        for j in range(hi, i, -1):
            if self.accessible(i, j)[0]:
                return j
        return None


@dataclass
class GreedyIndexTrace:
    major: list[int]
    minor: list[list[int]]
    occupied: list[int]
    d: int
    problems: list[str] = field(default_factory=list)

    @property
    def p(self) -> int:
        return len(self.major) - 1

    def p_t(self, t: int) -> int:
        return len(self.minor[t]) - 1

    def cover(self) -> set[int]:
        """{i_0..i_p} together with i_t+1..i_{t,p_t} for every t < p."""
        out = set(self.major)
        for t, seq in enumerate(self.minor):
            out.update(range(self.major[t] + 1, seq[-1] + 1))
        return out


def greedy_traces(g, model, order, d, u, analysis: BucketAnalysis | None = None) -> GreedyIndexTrace:
    """Both greedy sequences, with the step-count and bucket-count bounds checked."""
    an = analysis or BucketAnalysis(g, model, order, d, u)
    major = [0]
    while (nxt := an.max_accessible(major[-1])) is not None:
        major.append(nxt)
    minor = []
    for t in range(len(major) - 1):
        seq = [major[t]]
        while (nxt := an.max_accessible(seq[-1], below=major[t + 1])) is not None:
            seq.append(nxt)
        minor.append(seq)
    tr = GreedyIndexTrace(major, minor, an.occupied(), d)
    if tr.p > d:
        tr.problems.append(f"p = {tr.p} > d = {d}")
    for t in range(tr.p):
        if tr.p_t(t) > d - t:
            tr.problems.append(f"p_{t} = {tr.p_t(t)} > d - t = {d - t}")
    if len(tr.occupied) > (d + 1) ** 2:
        tr.problems.append(f"|L| = {len(tr.occupied)} > (d+1)^2 = {(d + 1) ** 2}")
    missing = set(tr.occupied) - tr.cover()
    if missing:
        tr.problems.append(f"occupied buckets {sorted(missing)} outside the greedy cover")
    for seq in [major] + minor:
        if any(b <= a for a, b in zip(seq, seq[1:])):
            tr.problems.append(f"trace {seq} is not strictly increasing")
    return tr


@dataclass
class JumpReport:
    triples: list[tuple[int, int, int]]
    violations: list[tuple[int, int, int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_jump_lemma(g, model, order, d, u, analysis: BucketAnalysis | None = None, strict=True) -> JumpReport:
    """For j < j' both accessible from i, buckets i+2..j-1 must miss WReach_d[u]."""
    an = analysis or BucketAnalysis(g, model, order, d, u)
    occupied = set(an.occupied())
    triples, bad = [], []
    for i in range(0, an.top):
        acc = [j for j in range(i + 1, an.top + 1) if an.accessible(i, j)[0]]
        for a in range(len(acc)):
            for b in range(a + 1, len(acc)):
                j, j2 = acc[a], acc[b]
                triples.append((i, j, j2))
                for t in range(i + 2, j):
                    if t in occupied:
                        bad.append((i, j, j2, t))
    rep = JumpReport(triples, bad)
    if strict and bad:
        raise CertificateError(f"jump lemma violated at (i, j, j', t) = {bad[0]}")
    return rep


def accessible(i, j, g, model, order, d, u):
    """Whether bucket j is accessible from bucket i, with a witness weak path from u."""
    ok, path = BucketAnalysis(g, model, order, d, u).accessible(i, j)
    if ok:
        assert is_weak_path(g, order, path, d)
    return ok, path
