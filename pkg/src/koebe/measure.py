"""The 1/|x|^2 measure: rings, discs, the disc-chain bound, and the rho-sum minimiser."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .geometry import CoinModel, Disc, inner_tangent_unit_disc, is_normalized

# Gauss-Kronrod 7/15 nodes on [-1, 1] (non-negative half; symmetric).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss nodes are the odd-indexed Kronrod nodes (x1, x3, x5, 0).
_GAUSS_IDX = np.array([1, 3, 5, 7, 9, 11, 13])
_WGAUSS = np.concatenate([_WG[:-1], _WG[::-1]])


def gk15(f, a: float, b: float, tol: float = 1e-12, max_intervals: int = 2000) -> tuple[float, float]:
    """Adaptive Gauss-Kronrod (7, 15) quadrature of a vectorised ``f``; returns (value, error)."""
    def rule(lo, hi):
        c, h = (lo + hi) / 2, (hi - lo) / 2
        y = f(c + h * _NODES)
        k = h * float(np.dot(_WK, y))
        g = h * float(np.dot(_WGAUSS, y[_GAUSS_IDX]))
        return k, abs(k - g)

    pieces = [(a, b, *rule(a, b))]
    while True:
        total = math.fsum(p[2] for p in pieces)
        err = math.fsum(p[3] for p in pieces)
        if err <= tol or len(pieces) >= max_intervals:
            return total, err
        i = max(range(len(pieces)), key=lambda j: pieces[j][3])
        lo, hi, _, _ = pieces.pop(i)
        mid = (lo + hi) / 2
        pieces += [(lo, mid, *rule(lo, mid)), (mid, hi, *rule(mid, hi))]


def density(x) -> float:
    s = float(x[0]) ** 2 + float(x[1]) ** 2
    if s == 0:
        raise InputError("the density is undefined at the origin")
    return 1.0 / s


def mu_ring(a: float, b: float) -> float:
    """mu of {a <= |x| <= b}: 2 pi ln(b/a)."""
    if a <= 0 or b < a:
        raise InputError(f"need 0 < a <= b, got a={a}, b={b}")
    return 2 * math.pi * math.log(b / a)


def mu_ring_numeric(a: float, b: float, tol: float = 1e-11) -> float:
    """The same ring by nested polar quadrature (an independent check on the closed form)."""
    if a <= 0 or b < a:
        raise InputError(f"need 0 < a <= b, got a={a}, b={b}")
    if a == b:
        return 0.0
    # g(t) * t = 1/t on the radial segment; the angular integrand is constant
    # but is still integrated numerically.
    radial, _ = gk15(lambda t: 1.0 / t, a, b, tol / (4 * math.pi))
    val, _ = gk15(lambda th: np.full_like(th, radial), 0.0, 2 * math.pi, tol / 2)
    return val


def mu_disc(D: Disc, tol: float = 1e-9) -> float:
    """mu(D) by adaptive polar quadrature about the origin.

    In the direction at angle psi from the centre direction the ray meets D
    between t1 and t2, and the radial integral of g(t) t is ln(t2 / t1).
    Substituting sin psi = (rho / a) sin th removes the square-root
    singularity at the tangent rays.
    """
    a = math.hypot(D.x, D.y)
    rho = D.r
    if a <= rho:
        raise InputError("the disc contains the origin")
    k = rho / a

    def integrand(th):
        s = k * np.sin(th)
        cpsi = np.sqrt(1 - s * s)
        half = rho * np.cos(th)
        mid = a * cpsi
        # ln((mid + half) / (mid - half)) computed stably
        return 2 * np.arctanh(half / mid) * k * np.cos(th) / cpsi

    val, _ = gk15(integrand, 0.0, math.pi / 2, tol / 2)
    return 2 * val


def mu_disc_monte_carlo(D: Disc, samples: int, rng: np.random.Generator) -> tuple[float, float]:
    """(estimate, standard error) from uniform samples in D."""
    u = rng.random(samples)
    th = rng.random(samples) * 2 * math.pi
    rad = D.r * np.sqrt(u)
    x = D.x + rad * np.cos(th)
    y = D.y + rad * np.sin(th)
    vals = math.pi * D.r ** 2 / (x * x + y * y)
    return float(vals.mean()), float(vals.std(ddof=1) / math.sqrt(samples))


def claim32_bound(rho: float, a: float) -> float:
    if not 0 < a:
        raise InputError("centre distance must be positive")
    if rho >= a:
        raise InputError("disc would contain the origin")
    return math.pi / 4 * rho * rho / (a * a)


@dataclass(frozen=True)
class RhoSequence:
    """rho_1..rho_{l+1} in [0, 1] with the last entry equal to 1."""

    rho: tuple[float, ...]

    def __post_init__(self):
        if not self.rho:
            raise InputError("empty rho sequence")
        if any(not 0 <= r <= 1 for r in self.rho):
            raise InputError("rho entries must lie in [0, 1]")
        if self.rho[-1] != 1:
            raise InputError("the last rho must be exactly 1")

    @property
    def ell(self) -> int:
        return len(self.rho) - 1

    @property
    def prefix(self) -> np.ndarray:
        return np.cumsum(self.rho)


def lemma33_sum(s: RhoSequence | tuple | list) -> float:
    rho = np.asarray(s.rho if isinstance(s, RhoSequence) else s, dtype=float)
    x = np.cumsum(rho)
    return float(np.sum(rho ** 2 / (1 + x) ** 2))


def lemma33_floor(ell: int) -> float:
    """min(l^(-2/3), ln^2 l / (36 (l + 1)))."""
    if ell < 1:
        raise InputError("ell must be >= 1")
    return min(ell ** (-2 / 3), math.log(ell) ** 2 / (36 * (ell + 1)))


@dataclass(frozen=True)
class MinimizeConfig:
    restarts: int = 20
    seed: int = 0
    max_iter: int = 3000
    gtol: float = 1e-12


def _value_grad(free: np.ndarray) -> tuple[float, np.ndarray]:
    rho = np.append(free, 1.0)
    x = np.cumsum(rho)
    q = 1 + x
    terms = rho ** 2 / q ** 2
    # d/d rho_k: 2 rho_k / q_k^2 - sum_{i >= k} 2 rho_i^2 / q_i^3
    tail = np.cumsum((2 * rho ** 2 / q ** 3)[::-1])[::-1]
    grad = 2 * rho / q ** 2 - tail
    return float(terms.sum()), grad[:-1]


def lemma33_minimize(ell: int, cfg: MinimizeConfig | None = None) -> tuple[float, RhoSequence]:
    """Best-found minimum over the box by projected gradient descent.

    Steps follow the Barzilai-Borwein rule with a non-monotone Armijo test
    (spectral projected gradient). Restart points are uniform in
    [0, s]^l with s log-uniform in [1/l, 1], since good sequences have small
    entries when l is large.
    """
    if ell < 1:
        raise InputError("ell must be >= 1")
    cfg = cfg or MinimizeConfig()
    rng = np.random.default_rng(cfg.seed)
    best_val, best = math.inf, None
    for _ in range(cfg.restarts):
        scale = float(np.exp(rng.uniform(-math.log(ell), 0.0))) if ell > 1 else 1.0
        z, f = _descend(rng.random(ell) * scale, cfg)
        if f < best_val:
            best_val, best = f, z
    seq = RhoSequence(tuple(float(v) for v in best) + (1.0,))
    return lemma33_sum(seq), seq


def _descend(z: np.ndarray, cfg: MinimizeConfig) -> tuple[np.ndarray, float]:
    f, g = _value_grad(z)
    recent = [f]
    step = 1.0
    for _ in range(cfg.max_iter):
        direction = np.clip(z - step * g, 0.0, 1.0) - z
        if float(np.max(np.abs(direction))) < cfg.gtol:
            break
        slope = float(np.dot(g, direction))
        ref = max(recent[-10:])
        t = 1.0
        while True:
            cand = z + t * direction
            fc, gc = _value_grad(cand)
            if fc <= ref + 1e-4 * t * slope or t < 1e-12:
                break
            t /= 2
        s_vec, y_vec = cand - z, gc - g
        z, f, g = cand, fc, gc
        recent.append(f)
        sy = float(np.dot(s_vec, y_vec))
        step = min(1e10, max(1e-10, float(np.dot(s_vec, s_vec)) / sy)) if sy > 0 else 1e3
    return z, f


@dataclass
class AdmRegionCertificate:
    path: tuple[int, ...]
    rho: tuple[float, ...]
    a: tuple[float, ...]
    chain_bound: float  # (pi/16) * lemma33_sum(rho)
    chain_tight: float  # (pi/4) * sum rho_i^2 / (1 + 2 rho_1 + ... + rho_i)^2
    mu: float
    discs: list[Disc] = field(repr=False, default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def adm_certificate(model: CoinModel, order, path, tol: float = 1e-9, eps: float = 1e-8) -> AdmRegionCertificate:
    """Area certificate for one admissibility path from the normalised root ``path[0]``."""
    path = tuple(path)
    if len(path) < 2:
        raise InputError("path must have at least one edge")
    u, end, inner = path[0], path[-1], path[1:-1]
    if not is_normalized(model, u, 1e-9):
        raise InputError("model is not normalised at the path origin")
    rank = order.rank
    if rank[end] >= rank[u] or any(rank[w] <= rank[u] for w in inner):
        raise InputError("not a strong reachability path")
    discs = [model.disc(w) for w in inner]
    prev = model.disc(path[-2])
    big = model.disc(end)
    # Tangency point of the end disc with its predecessor on the path.
    dx, dy = prev.x - big.x, prev.y - big.y
    dist = math.hypot(dx, dy)
    x = (big.x + big.r * dx / dist, big.y + big.r * dy / dist)
    discs.append(inner_tangent_unit_disc(big, x, 1.0, eps=1e-6))
    rho = tuple(D.r for D in discs)
    a = tuple(math.hypot(D.x, D.y) for D in discs)
    problems = []
    reach = 1.0
    tight = 0.0
    for i, (r_i, a_i) in enumerate(zip(rho, a)):
        cap = reach + r_i
        if a_i > cap * (1 + eps):
            problems.append(f"disc {i + 1}: a={a_i!r} exceeds chain cap {cap!r}")
        tight += r_i * r_i / cap ** 2
        reach += 2 * r_i
    # Every disc lies in the ring 1 <= |x| <= 2L + 1, L the path length.
    outer = 2 * (len(path) - 1) + 1
    for i, D in enumerate(discs):
        norms = np.hypot(*ring_boundary_samples(D).T)
        if norms.min() < 1 - eps or norms.max() > outer * (1 + eps):
            problems.append(f"disc {i + 1} leaves the ring [1, {outer}]")
    mu = math.fsum(mu_disc(D, tol) for D in discs)
    rho_clamped = tuple(min(1.0, r) for r in rho[:-1]) + (1.0,)
    bound = math.pi / 16 * lemma33_sum(rho_clamped)
    if mu < bound - tol * len(discs):
        problems.append(f"mu {mu!r} below chain bound {bound!r}")
    return AdmRegionCertificate(path, rho, a, bound, math.pi / 4 * tight, mu, discs, problems)


def ring_boundary_samples(D: Disc, k: int = 64) -> np.ndarray:
    th = np.linspace(0, 2 * math.pi, k, endpoint=False)
    return np.column_stack([D.x + D.r * np.cos(th), D.y + D.r * np.sin(th)])
