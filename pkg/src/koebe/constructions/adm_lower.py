"""Recursive grid graph with large admissibility, and its witness path families.

Grids H_w are indexed by words w over {W, E} of length < k. Inside a grid,
vertex (a, b) has 0-based coordinates with the north corner at (0, 0) and
sides (1-based, north-to-south)

    NW[i] = (i-1, 0)     NE[i] = (0, i-1)
    SW[i] = (K-1, i-1)   SE[i] = (i-1, K-1)

so swapping coordinates exchanges W and E. All routing is written for the
"west" orientation and mirrored when needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..admissibility import AdmissibilityCertificate, check_family
from ..errors import CertificateError, InputError
from ..graph import PlanarGraph

W, E = "W", "E"
OTHER = {W: E, E: W}


@dataclass
class AdmLowerInstance:
    k: int
    graph: PlanarGraph
    grids: dict[str, int]  # word -> base id
    apex: dict[str, int]  # word of length k -> vertex id

    @property
    def K(self) -> int:
        return 2 ** self.k

    @property
    def d(self) -> int:
        return self.k * 2 ** (self.k + 2)

    @property
    def segment_cap(self) -> int:
        return 2 ** (self.k + 1) - 2

    def vid(self, w: str, a: int, b: int) -> int:
        return self.grids[w] + a * self.K + b

    def side(self, w: str, name: str, i: int) -> int:
        """i-th (1-based) vertex of side ``name`` of H_w."""
        K = self.K
        a, b = {
            "NW": (i - 1, 0),
            "NE": (0, i - 1),
            "SW": (K - 1, i - 1),
            "SE": (i - 1, K - 1),
        }[name]
        return self.vid(w, a, b)

    def grid_of(self, v: int) -> str | None:
        for w, base in self.grids.items():
            if base <= v < base + self.K ** 2:
                return w
        return None


@dataclass
class WitnessFamily:
    kind: str  # "P", "Q" or "trimmed"
    word: str  # ws for P, w for Q
    paths: list[tuple[int, ...]]
    u: str | None = None  # apex word for Q
    ends: list[int] = field(default_factory=list)  # side index of each endpoint (None for apexes)

    def to_document(self) -> dict:
        return {"kind": self.kind, "word": self.word, "u": self.u, "paths": [list(p) for p in self.paths]}


def _words(k: int, length: int) -> list[str]:
    return ["".join(t) for t in product((W, E), repeat=length)]


def gen_adm_lower(k: int) -> AdmLowerInstance:
    if k < 2:
        raise InputError("need k >= 2")
    K = 2 ** k
    grids: dict[str, int] = {}
    n = 0
    for length in range(k):
        for w in _words(k, length):
            grids[w] = n
            n += K * K
    apex = {}
    for u in _words(k, k):
        apex[u] = n
        n += 1
    inst = AdmLowerInstance(k, None, grids, apex)  # type: ignore[arg-type]
    edges = []
    for w in grids:
        for a in range(K):
            for b in range(K):
                if b + 1 < K:
                    edges.append((inst.vid(w, a, b), inst.vid(w, a, b + 1)))
                if a + 1 < K:
                    edges.append((inst.vid(w, a, b), inst.vid(w, a + 1, b)))
        if len(w) < k - 1:
            for i in range(1, K + 1):
                edges.append((inst.side(w, "SW", i), inst.side(w + W, "NE", i)))
                edges.append((inst.side(w, "SE", i), inst.side(w + E, "NW", i)))
    for u, v in apex.items():
        w, s = u[:-1], u[-1]
        for i in range(1, K + 1):
            edges.append((v, inst.side(w, "S" + s, i)))
    inst.graph = PlanarGraph.from_edges(n, edges)
    assert n == (K - 1) * K * K + K
    return inst


def _mirror(route, flip: bool):
    return [(b, a) for a, b in route] if flip else route


def _segment(a0, b0, moves):
    """Staircase from (a0, b0): each move is (axis, target) along rows ('b') or columns ('a')."""
    pts = [(a0, b0)]
    a, b = a0, b0
    for axis, target in moves:
        if axis == "b":
            step = 1 if target > b else -1
            while b != target:
                b += step
                pts.append((a, b))
        else:
            step = 1 if target > a else -1
            while a != target:
                a += step
                pts.append((a, b))
    return pts


def _p_route(K, entry, j, m):
    """Within a west-oriented grid: from SW[j] or SE[j] to a distinct vertex among NE[1..m]."""
    if entry == "SW":
        # straight up column j-1 to NE[j]
        return _segment(K - 1, j - 1, [("a", 0)]), j
    a = j - 1
    col = m - 1 - a
    return _segment(a, K - 1, [("b", col), ("a", 0)]), col + 1


def _q_route(K, entry, i, c):
    """West-oriented Q extension from SW[i] (case A) or SE[i] (case B).

    Returns (points, target_side, target_index) with target_side "N"
    (the NE side) or "S" (the opposite south side, continued by a P path).
    """
    if entry == "SW":
        if i <= c:
            return _segment(K - 1, i - 1, [("a", 0)]), "N", i
        j = i - c
        return _segment(K - 1, i - 1, [("a", j - 1), ("b", K - 1)]), "S", j
    if i <= c:
        return _segment(i - 1, K - 1, [("b", c - i), ("a", 0)]), "N", c + 1 - i
    j = i - c
    return _segment(i - 1, K - 1, [("b", j - 1), ("a", K - 1)]), "S", j


def build_p_families(inst: AdmLowerInstance) -> dict[str, WitnessFamily]:
    """P_{ws} for every w in K and s in {W, E}, keyed by the word ws."""
    k, K = inst.k, inst.K
    fam: dict[str, WitnessFamily] = {}
    for length in range(k, 0, -1):
        for ws in _words(k, length):
            w, s = ws[:-1], ws[-1]
            if length == k:
                first = inst.side(w, "S" + s, 1)
                fam[ws] = WitnessFamily("P", ws, [(inst.apex[ws], first)], ends=[1])
                continue
            flip = s == E  # grid H_{ws} is oriented west when s = W
            m = 2 ** (k - len(w) - 1)
            paths, ends = [], []
            for child_sym in (W, E):
                child = fam[ws + child_sym]
                # In the west frame, entries from P_{ws s} are on SW and from P_{ws s'} on SE.
                entry = "SW" if child_sym == s else "SE"
                for p, j in zip(child.paths, child.ends):
                    pts, t = _p_route(K, entry, j, m)
                    seg = [inst.vid(ws, a, b) for a, b in _mirror(pts, flip)]
                    assert seg[0] == p[-1]
                    exit_ = inst.side(w, "S" + s, t)
                    paths.append(tuple(p) + tuple(seg[1:]) + (exit_,))
                    ends.append(t)
            fam[ws] = WitnessFamily("P", ws, paths, ends=ends)
    return fam


def build_witness_families(inst: AdmLowerInstance, p_fams=None) -> dict[str, WitnessFamily]:
    """Q_u = Q_{epsilon, u} for every apex word u."""
    p_fams = p_fams or build_p_families(inst)
    k, K = inst.k, inst.K
    out = {}
    for u in inst.apex:
        v_u = inst.apex[u]
        # Q_{u,u}: K - 1 trivial paths; the i-th one leaves v_u towards (S s)_w[i].
        paths: list[tuple[int, ...]] = [(v_u,)] * (K - 1)
        ends: list[int | None] = list(range(1, K))
        for length in range(k - 1, -1, -1):
            w = u[:length]
            s = u[length]  # the child of w on the way to u is ws
            flip = length > 0 and w[-1] == E
            c = K - 2 ** (k - length) if length > 0 else 0
            # In the west frame entries arrive on SW when (s == W) xor flip.
            entry = "SW" if (s == W) != flip else "SE"
            other = OTHER[s]
            new_paths, new_ends = [], []
            for p, i in zip(paths, ends):
                if i is None:
                    new_paths.append(p)
                    new_ends.append(None)
                    continue
                pts, tgt, j = _q_route(K, entry, i, c)
                seg = tuple(inst.vid(w, a, b) for a, b in _mirror(pts, flip))
                assert seg[0] == inst.side(w, "S" + s, i)
                if tgt == "N":
                    new_paths.append(p + seg)
                    new_ends.append(j)
                else:
                    tail = p_fams[w + other]
                    pp = tail.paths[tail.ends.index(j)]
                    assert pp[-1] == seg[-1]
                    new_paths.append(p + seg + tuple(reversed(pp[:-1])))
                    new_ends.append(None)
            paths, ends = new_paths, new_ends
            if length > 0:
                # Cross into the parent grid: (N t)_w[i] -> (S last(w))_{parent}[i], done next round.
                pass
        out[u] = WitnessFamily("Q", "", paths, u=u, ends=[e for e in ends])
    return out


def _grid_segments(inst, path):
    """Map grid word -> list of maximal runs (index ranges) of the path inside that grid."""
    runs: dict[str, list[tuple[int, int]]] = {}
    cur, start = None, 0
    for idx, v in enumerate(list(path) + [None]):
        g = inst.grid_of(v) if v is not None else None
        if g != cur:
            if cur is not None:
                runs.setdefault(cur, []).append((start, idx - 1))
            cur, start = g, idx
    return runs


def validate_witness(family: WitnessFamily, inst: AdmLowerInstance, d_cap: int | None = None) -> list[str]:
    """Violations of disjointness, straightness, length caps and endpoint contracts."""
    d_cap = inst.d if d_cap is None else d_cap
    g = inst.graph
    apexes = set(inst.apex.values())
    bad = []
    seen: dict[int, int] = {}
    shared = family.paths[0][0] if family.kind in ("Q", "trimmed") and family.paths else None
    for n_p, p in enumerate(family.paths):
        if len(set(p)) != len(p):
            bad.append(f"path {n_p} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                bad.append(f"path {n_p} uses non-edge {a}-{b}")
        for v in p:
            if v == shared and family.kind != "P":
                continue
            if v in seen and seen[v] != n_p:
                bad.append(f"paths {seen[v]} and {n_p} share vertex {v}")
            seen[v] = n_p
        if len(p) - 1 > d_cap:
            bad.append(f"path {n_p} has length {len(p) - 1} > {d_cap}")
        if any(v in apexes for v in p[1:-1]):
            bad.append(f"path {n_p} passes through an apex")
        for w, runs in _grid_segments(inst, p).items():
            if len(runs) > 1:
                bad.append(f"path {n_p} enters grid {w or 'eps'} twice (not straight)")
            for lo, hi in runs:
                if hi - lo > inst.segment_cap:
                    bad.append(f"path {n_p} has a segment of length {hi - lo} in grid {w or 'eps'} (not straight)")
    bad += _endpoint_contract(family, inst)
    return bad


def _endpoint_contract(family, inst) -> list[str]:
    k, K = inst.k, inst.K
    bad = []
    if family.kind == "P":
        ws = family.word
        w, s = ws[:-1], ws[-1]
        size = 2 ** (k - len(w) - 1)
        if len(family.paths) != size:
            bad.append(f"P_{ws} has {len(family.paths)} paths, expected {size}")
        allowed = {inst.side(w, "S" + s, i) for i in range(1, size + 1)}
        starts = {inst.apex[u] for u in inst.apex if u.startswith(ws)}
        for n_p, p in enumerate(family.paths):
            if p[-1] not in allowed:
                bad.append(f"P_{ws} path {n_p} ends outside the first {size} vertices of S{s}_{w}")
            if p[0] not in starts:
                bad.append(f"P_{ws} path {n_p} does not start at an apex below {ws}")
    elif family.kind == "Q":
        u = family.u
        if len(family.paths) != K - 1:
            bad.append(f"Q_{u} has {len(family.paths)} paths, expected {K - 1}")
        targets = {inst.apex[x] for x in inst.apex if x != u}
        ends = [p[-1] for p in family.paths]
        if set(ends) != targets or len(ends) != len(targets):
            bad.append(f"Q_{u} does not end exactly at the other apexes")
        if any(p[0] != inst.apex[u] for p in family.paths):
            bad.append(f"Q_{u} has a path not starting at its apex")
    return bad


def trim_witness(
    families: dict[str, WitnessFamily], inst: AdmLowerInstance, order, d: int | None = None
) -> AdmissibilityCertificate:
    """Trim Q_{u_max} at the first vertex smaller than v_{u_max}; checked as an admissibility family.

    ``d`` defaults to k * 2^(k+2); a smaller cap is fine as long as every
    trimmed path still fits.
    """
    d = inst.d if d is None else d
    rank = order.rank
    u_max = max(inst.apex, key=lambda u: rank[inst.apex[u]])
    v = inst.apex[u_max]
    out = []
    for p in families[u_max].paths:
        cut = next(i for i in range(1, len(p)) if rank[p[i]] < rank[v])
        out.append(tuple(p[: cut + 1]))
    problems = check_family(inst.graph, order, v, d, out)
    if problems or len(out) < inst.K - 1:
        raise CertificateError(f"trimmed family invalid: {problems[:3]}")
    return AdmissibilityCertificate(v, d, tuple(out), len(out), len(out), False)
