"""Discs, coin models, validation, Koebe orderings."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InputError
from .graph import PlanarGraph, VertexOrdering, ordering_from_ids


@dataclass(frozen=True)
class Disc:
    x: float
    y: float
    r: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.r)):
            raise InputError("disc coordinates must be finite")
        if self.r <= 0:
            raise InputError(f"disc radius must be positive, got {self.r}")

    @property
    def center(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class ToleranceConfig:
    overlap: float = 1e-8
    tangent: float = 1e-8
    tie: float = 1e-9

    def __post_init__(self):
        if min(self.overlap, self.tangent, self.tie) < 0:
            raise InputError("tolerances must be non-negative")


@dataclass(frozen=True, eq=False)
class CoinModel:
    """Disc per vertex id; arrays are indexed by vertex id."""

    x: np.ndarray
    y: np.ndarray
    r: np.ndarray
    tol: ToleranceConfig = field(default_factory=ToleranceConfig)

    def __post_init__(self):
        for name in ("x", "y", "r"):
            a = np.asarray(getattr(self, name), dtype=float)
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        if not (self.x.shape == self.y.shape == self.r.shape) or self.r.ndim != 1:
            raise InputError("x, y, r must be equal-length vectors")
        if self.n and (not np.all(np.isfinite(self.x)) or not np.all(np.isfinite(self.y))):
            raise InputError("disc centers must be finite")
        if self.n and not np.all(self.r > 0):
            raise InputError("disc radii must be positive")

    @classmethod
    def from_discs(cls, discs, tol: ToleranceConfig | None = None) -> "CoinModel":
        discs = list(discs)
        return cls(
            np.array([d.x for d in discs], dtype=float),
            np.array([d.y for d in discs], dtype=float),
            np.array([d.r for d in discs], dtype=float),
            tol or ToleranceConfig(),
        )

    @property
    def n(self) -> int:
        return len(self.r)

    def disc(self, v: int) -> Disc:
        return Disc(float(self.x[v]), float(self.y[v]), float(self.r[v]))

    def discs(self) -> list[Disc]:
        return [self.disc(v) for v in range(self.n)]

    def to_document(self) -> dict:
        return {
            "discs": [
                {"id": v, "x": float(self.x[v]), "y": float(self.y[v]), "r": float(self.r[v])}
                for v in range(self.n)
            ]
        }


def load_model(document, tol: ToleranceConfig | None = None) -> CoinModel:
    """Coin model from a dict, a JSON string or a path."""
    if isinstance(document, Path) or (isinstance(document, str) and not document.lstrip().startswith("{")):
        document = json.loads(Path(document).read_text())
    elif isinstance(document, str):
        document = json.loads(document)
    try:
        items = document["discs"]
        rows = sorted((int(d["id"]), float(d["x"]), float(d["y"]), float(d["r"])) for d in items)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed coin model document: {exc}") from exc
    if [row[0] for row in rows] != list(range(len(rows))):
        raise InputError("disc ids must be exactly 0..n-1")
    return CoinModel.from_discs([Disc(*row[1:]) for row in rows], tol)


def dump_model(model: CoinModel, path) -> None:
    Path(path).write_text(json.dumps(model.to_document(), indent=1))


def _distances_from(model: CoinModel, v: int) -> np.ndarray:
    return np.hypot(model.x - model.x[v], model.y - model.y[v])


@dataclass
class ValidationReport:
    overlaps: list[tuple[int, int, float]] = field(default_factory=list)
    tangency: list[tuple[int, int, float]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.overlaps and not self.tangency

    def max_tangency_residual(self) -> float:
        return max((abs(res) for *_, res in self.tangency), default=0.0)


def tangency_residuals(g: PlanarGraph, model: CoinModel) -> np.ndarray:
    """Relative defect |dist - (r_u + r_v)| / (r_u + r_v) per edge, in edge order."""
    out = np.empty(g.m)
    for k, (u, v) in enumerate(g.edges):
        s = model.r[u] + model.r[v]
        out[k] = abs(math.hypot(model.x[u] - model.x[v], model.y[u] - model.y[v]) - s) / s
    return out


def validate_model(g: PlanarGraph, model: CoinModel, tol: ToleranceConfig | None = None) -> ValidationReport:
    """Check interior-disjointness of all pairs and tangency of all edges.

    Residuals are relative to the pair's radius sum, which is the
    unit-normalised scale for that pair and keeps multi-scale models
    meaningful.
    """
    tol = tol or model.tol
    if model.n != g.n:
        raise InputError(f"model has {model.n} discs but the graph has {g.n} vertices")
    rep = ValidationReport()
    for u in range(model.n - 1):
        dist = _distances_from(model, u)[u + 1:]
        s = model.r[u] + model.r[u + 1:]
        rel = (dist - s) / s
        for k in np.flatnonzero(rel < -tol.overlap):
            rep.overlaps.append((u, u + 1 + int(k), float(rel[k])))
    for (u, v), res in zip(g.edges, tangency_residuals(g, model)):
        if res > tol.tangent:
            rep.tangency.append((u, v, float(res)))
    return rep


def contact_graph(model: CoinModel, eps: float | None = None) -> PlanarGraph:
    eps = model.tol.tangent if eps is None else eps
    edges = []
    for u in range(model.n - 1):
        dist = _distances_from(model, u)[u + 1:]
        s = model.r[u] + model.r[u + 1:]
        for k in np.flatnonzero(np.abs(dist - s) <= eps * s):
            edges.append((u, u + 1 + int(k)))
    return PlanarGraph.from_edges(model.n, edges)


def koebe_ordering(model: CoinModel, tie: float | None = None) -> VertexOrdering:
    """Non-increasing radii; radii within relative ``tie`` of each other go by ascending id."""
    tie = model.tol.tie if tie is None else tie
    r = model.r
    idx = sorted(range(model.n), key=lambda v: (-r[v], v))
    out: list[int] = []
    group: list[int] = []
    for v in idx:
        if group and r[group[-1]] - r[v] > tie * r[group[-1]]:
            out += sorted(group)
            group = []
        group.append(v)
    out += sorted(group)
    return ordering_from_ids(out)


def normalize(model: CoinModel, u: int) -> CoinModel:
    """Similarity taking D(u) to the unit disc at the origin."""
    s = model.r[u]
    return CoinModel((model.x - model.x[u]) / s, (model.y - model.y[u]) / s, model.r / s, model.tol)


def is_normalized(model: CoinModel, u: int, eps: float = 1e-12) -> bool:
    return abs(model.r[u] - 1) <= eps and abs(model.x[u]) <= eps and abs(model.y[u]) <= eps


def inner_tangent_unit_disc(D: Disc, x, rho: float, eps: float = 1e-8) -> Disc:
    """Image of ``D`` under the homothety at boundary point ``x`` with ratio rho / r_D."""
    if rho > D.r:
        raise InputError(f"target radius {rho} exceeds disc radius {D.r}")
    if rho <= 0:
        raise InputError("target radius must be positive")
    off = math.hypot(x[0] - D.x, x[1] - D.y)
    if abs(off - D.r) > eps * D.r:
        raise InputError("point is not on the disc boundary")
    t = rho / D.r
    return Disc(x[0] + t * (D.x - x[0]), x[1] + t * (D.y - x[1]), rho)
