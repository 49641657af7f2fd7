"""Graphs with optional combinatorial embeddings, vertex orderings, faces."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True)
class PlanarGraph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rotation[v]`` (when present) is the cyclic order of the neighbours of
    ``v`` in a planar embedding. Instances are immutable.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...] | None = None
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a non-negative int, got {n!r}")
        seen = set()
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        if n >= 3 and len(norm) > 3 * n - 6:
            raise InputError(
                f"{len(norm)} edges exceed the planar budget 3n-6 = {3 * n - 6}"
            )
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        if self.rotation is not None:
            rot = tuple(tuple(r) for r in self.rotation)
            if len(rot) != n:
                raise InputError("rotation must list one neighbour cycle per vertex")
            for v in range(n):
                if len(rot[v]) != len(set(rot[v])) or sorted(rot[v]) != list(self.adj[v]):
                    raise InputError(f"rotation at vertex {v} does not list its neighbours exactly once")
            object.__setattr__(self, "rotation", rot)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], rotation=None) -> "PlanarGraph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges), rotation)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def to_document(self) -> dict:
        doc = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.rotation is not None:
            doc["rotation"] = [list(r) for r in self.rotation]
        return doc


@dataclass(frozen=True)
class VertexOrdering:
    """Total order on ``0..n-1``; ``order[0]`` is the minimum."""

    order: tuple[int, ...]
    rank: tuple[int, ...]

    def __len__(self):
        return len(self.order)

    def less(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]


def ordering_from_ids(ids: Sequence[int]) -> VertexOrdering:
    ids = [int(x) for x in ids]
    n = len(ids)
    rank = [-1] * n
    for pos, v in enumerate(ids):
        if not 0 <= v < n or rank[v] != -1:
            raise InputError(f"ordering is not a permutation of 0..{n - 1}")
        rank[v] = pos
    return VertexOrdering(tuple(ids), tuple(rank))


@dataclass(frozen=True)
class FaceSet:
    """Faces as vertex cycles; face ``f`` uses directed edges f[i] -> f[i+1]."""

    faces: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.faces)

    def face_of_dart(self) -> dict[tuple[int, int], int]:
        out = {}
        for fid, f in enumerate(self.faces):
            for i, u in enumerate(f):
                out[(u, f[(i + 1) % len(f)])] = fid
        return out


def trace_faces(g: PlanarGraph) -> FaceSet:
    """Trace faces of the embedding given by ``g.rotation``.

    After arriving at ``v`` along ``u -> v`` we leave along the neighbour that
    precedes ``u`` in the rotation at ``v``. With counter-clockwise rotations
    this traces bounded faces counter-clockwise.
    """
    if g.rotation is None:
        raise InputError("graph has no rotation system")
    if not g.is_connected():
        raise InputError("face tracing requires a connected graph")
    rot = g.rotation
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    visited: set[tuple[int, int]] = set()
    faces = []
    for u in range(g.n):
        for v in rot[u]:
            if (u, v) in visited:
                continue
            face = []
            a, b = u, v
            while (a, b) not in visited:
                visited.add((a, b))
                face.append(a)
                r = rot[b]
                c = r[(pos[b][a] - 1) % len(r)]
                a, b = b, c
            if (a, b) != (u, v):
                raise InputError("rotation system is inconsistent with the edge set")
            faces.append(tuple(face))
    if g.n > 0 and g.m > 0 and g.n - g.m + len(faces) != 2:
        raise InputError(
            f"Euler check failed: n - m + f = {g.n - g.m + len(faces)} (not a planar embedding)"
        )
    return FaceSet(tuple(faces))


def is_triangulation(g: PlanarGraph, outer_face: int, faces: FaceSet | None = None) -> bool:
    faces = faces if faces is not None else trace_faces(g)
    if not 0 <= outer_face < len(faces):
        raise InputError(f"outer face id {outer_face} out of range 0..{len(faces) - 1}")
    return all(len(f) == 3 for i, f in enumerate(faces.faces) if i != outer_face)


def rotation_from_triangles(n: int, triangles: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Rotation system from consistently oriented faces covering a sphere or disc.

    Each face (usually a triangle) must be listed in the orientation in which
    it is traced by :func:`trace_faces`.
    """
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for face in triangles:
        k = len(face)
        for i in range(k):
            # Face z -> x -> y: in the rotation at x, z directly follows y.
            z, x, y = face[i - 1], face[i], face[(i + 1) % k]
            if y in succ[x]:
                raise InputError("faces are not consistently oriented")
            succ[x][y] = z
    rot = []
    for v in range(n):
        s = succ[v]
        if not s:
            rot.append(())
            continue
        targets = set(s.values())
        starts = [x for x in s if x not in targets]
        start = starts[0] if starts else min(s)
        cyc = [start]
        x = s.get(start)
        while x is not None and x != start:
            cyc.append(x)
            x = s.get(x)
        rot.append(tuple(cyc))
    return tuple(rot)


def load_graph(document) -> PlanarGraph:
    """Build a graph from a parsed JSON document, a JSON string or a path."""
    if isinstance(document, (str, Path)):
        p = Path(document)
        if p.exists():
            document = json.loads(p.read_text())
        else:
            document = json.loads(str(document))
    if not isinstance(document, dict) or "n" not in document or "edges" not in document:
        raise InputError('graph document must be an object with keys "n" and "edges"')
    n = document["n"]
    edges = document["edges"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError('"n" must be an integer')
    if not isinstance(edges, list) or any(
        not isinstance(e, (list, tuple)) or len(e) != 2 or not all(isinstance(x, int) for x in e)
        for e in edges
    ):
        raise InputError('"edges" must be a list of [u, v] integer pairs')
    rotation = document.get("rotation")
    if rotation is not None and (
        not isinstance(rotation, list) or any(not isinstance(r, list) for r in rotation)
    ):
        raise InputError('"rotation" must be a list of neighbour lists')
    return PlanarGraph.from_edges(n, edges, rotation)


def load_ordering(document) -> VertexOrdering:
    if isinstance(document, (str, Path)):
        p = Path(document)
        document = json.loads(p.read_text()) if p.exists() else json.loads(str(document))
    if not isinstance(document, list):
        raise InputError("ordering document must be a JSON array of vertex ids")
    return ordering_from_ids(document)
