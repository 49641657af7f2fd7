"""Experiment suites that turn the bounds into checkable assertions.

Each suite takes a parameter dict (defaults below) and a seed and returns a
RunManifest. Manifests hold one entry per named assertion, the hashes of
every generated input and any result tables.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from types import SimpleNamespace

import numpy as np

from . import __version__
from .errors import InputError
from .geometry import Disc, koebe_ordering, normalize
from .graph import ordering_from_ids


@dataclass
class Assertion:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ExperimentSuite:
    suite_id: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    out: Path | None = None


@dataclass
class RunManifest:
    suite: str
    version: str
    seed: int
    params: dict
    input_hashes: dict[str, str] = field(default_factory=dict)
    wall_clock: float = 0.0
    assertions: list[Assertion] = field(default_factory=list)
    tables: dict[str, list[dict]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        if any(a.name == name for a in self.assertions):
            raise ValueError(f"assertion {name!r} recorded twice")
        self.assertions.append(Assertion(name, bool(passed), detail))
        return bool(passed)

    def to_document(self) -> dict:
        doc = asdict(self)
        doc["passed"] = self.passed
        return doc


def digest(doc) -> str:
    """sha256 of the canonical JSON form of a document."""
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


# ---------------------------------------------------------------- suites


def _packed_triangulations(sizes, seeds, man):
    from .families import random_triangulation
    from .packing import pack

    out = []
    for n in sizes:
        for s in seeds:
            g = random_triangulation(n, seed=s)
            model, _ = pack(g)
            man.input_hashes[f"triangulation n={n} seed={s}"] = digest(g.to_document())
            out.append((n, s, g, model))
    return out


def suite_scol_exact_bound(p, seed, man):
    from .reach import metric_of_ordering

    graphs = _packed_triangulations(p["sizes"], range(seed, seed + p["seeds"]), man)
    worst = {d: 0 for d in p["ds"]}
    for n, s, g, model in graphs:
        order = koebe_ordering(model)
        for d in p["ds"]:
            worst[d] = max(worst[d], metric_of_ordering(g, order, d, "scol").value)
    man.tables["scol"] = [{"d": d, "max_scol": worst[d], "bound": (2 * d + 1) ** 2} for d in p["ds"]]
    man.check("at least 20 instances", len(graphs) >= 20, f"{len(graphs)} packed triangulations")
    for d in p["ds"]:
        man.check(f"scol_{d} <= {(2 * d + 1) ** 2}", worst[d] <= (2 * d + 1) ** 2, f"max {worst[d]}")


def suite_grid_scol(p, seed, man):
    from .constructions import gen_grid_coin, grid_scol_certificate

    for d in p["ds"]:
        inst = gen_grid_coin(d)
        man.input_hashes[f"grid d={d}"] = digest(inst.model.to_document())
        bound, (D, large) = grid_scol_certificate(inst)
        want = ((d - 2) // 6) ** 2
        man.check(f"grid d={d}: scol_{d} >= {want}", bound >= want, f"D={D}, {len(large)} large discs reached")


def suite_multigrid_wcol(p, seed, man):
    from .constructions import gen_multigrid_coin, multigrid_wcol_certificate

    d = p["d"]
    inst = gen_multigrid_coin(d)
    man.input_hashes[f"multigrid d={d}"] = digest(inst.model.to_document())
    man.check(f"multigrid d={d} has {p['n']} vertices", inst.graph.n == p["n"], f"n={inst.graph.n}")
    count, _ = multigrid_wcol_certificate(inst)
    man.check(f"wcol_{d} >= {2 * d}", count >= 2 * d, f"{count} large discs weakly reachable")


def suite_adm_lower(p, seed, man):
    from .admissibility import adm_vertex
    from .constructions import build_witness_families, gen_adm_lower, trim_witness, validate_witness
    from .constructions.adm_lower import build_p_families

    rng = np.random.default_rng(seed)
    for k, d in zip(p["ks"], p["ds"]):
        inst = gen_adm_lower(k)
        man.input_hashes[f"adm-lower k={k}"] = digest(inst.graph.to_document())
        P = build_p_families(inst)
        Q = build_witness_families(inst, P)
        bad = [m for f in list(P.values()) + list(Q.values()) for m in validate_witness(f, inst, d)]
        man.check(f"k={k}: witness families valid within length {d}", not bad, "; ".join(bad[:3]))
        orders = [ordering_from_ids(list(range(inst.graph.n)))]
        orders += [ordering_from_ids(list(rng.permutation(inst.graph.n))) for _ in range(p["orderings"])]
        sizes, fails = [], 0
        for o in orders:
            try:
                sizes.append(trim_witness(Q, inst, o, d).value)
            except Exception:  # noqa: BLE001 - a failed certificate is what we count
                fails += 1
        need = 2 ** k - 1
        man.check(
            f"k={k}: adm_{d} >= {need} on {len(orders)} orderings",
            fails == 0 and min(sizes) >= need,
            f"min family {min(sizes) if sizes else None}, {fails} failures",
        )
        if k in p["exact_ks"]:
            cert = trim_witness(Q, inst, orders[0], d)
            ex = adm_vertex(inst.graph, orders[0], d, cert.v, mode="exact")
            man.check(f"k={k}: exact solver adm_{d}(v) >= {need}", ex.value >= need, f"exact value {ex.value}")


def suite_grid_scol_lower(p, seed, man):
    from .constructions import gen_square_grid, grid_scol_lower_certificate

    rng = np.random.default_rng(seed)
    for d in p["exhaustive"]:
        g = gen_square_grid(d)
        cache: dict = {}
        worst = None
        for perm in itertools.permutations(range(g.n)):
            rank = [0] * g.n
            for i, v in enumerate(perm):
                rank[v] = i
            c, _ = grid_scol_lower_certificate(g, SimpleNamespace(rank=rank), d, cache)
            worst = c if worst is None else min(worst, c)
        need = math.ceil(d / 2)
        man.check(
            f"d={d}: scol_{3 * d - 2} >= {need} on all {math.factorial(g.n)} orderings",
            worst >= need,
            f"min certificate {worst}",
        )
    for d in p["sampled"]:
        g = gen_square_grid(d)
        cache = {}
        worst = min(
            grid_scol_lower_certificate(g, ordering_from_ids(list(rng.permutation(g.n))), d, cache)[0]
            for _ in range(p["orderings"])
        )
        need = math.ceil(d / 2)
        man.check(
            f"d={d}: scol_{3 * d - 2} >= {need} on {p['orderings']} random orderings", worst >= need,
            f"min certificate {worst}",
        )


def suite_adm_trend(p, seed, man):
    from .reach import metric_of_ordering

    graphs = _packed_triangulations(p["sizes"], range(seed, seed + p["seeds"]), man)
    ds = p["ds"]
    best = {d: 0.0 for d in ds}
    top = {d: 0 for d in ds}
    for n, s, g, model in graphs:
        order = koebe_ordering(model)
        for d in ds:
            v = metric_of_ordering(g, order, d, "adm", mode="bounds").value
            top[d] = max(top[d], v)
            best[d] = max(best[d], v * math.log(d) / d)
    # Least-squares constant c in max adm_d ~ c * d / ln d.
    x = np.array([d / math.log(d) for d in ds])
    y = np.array([top[d] for d in ds], dtype=float)
    c = float(x @ y / (x @ x))
    man.tables["adm_trend"] = [
        {"d": d, "max_adm": top[d], "max_ratio": best[d], "fit_c": c, "fit": c * d / math.log(d)} for d in ds
    ]
    man.check("at least 20 instances", len(graphs) >= 20, f"{len(graphs)} packed triangulations")
    lo, hi = ds[0], ds[-1]
    man.check(
        f"no growth: ratio(d={hi}) <= 2 ratio(d={lo})",
        best[hi] <= 2 * best[lo],
        f"{best[hi]:.6g} vs {best[lo]:.6g}",
    )


def suite_lemma33_floor(p, seed, man):
    from .measure import MinimizeConfig, lemma33_floor, lemma33_minimize

    rows = []
    for ell in p["ells"]:
        val, _ = lemma33_minimize(ell, MinimizeConfig(seed=seed))
        floor = lemma33_floor(ell)
        rows.append({"ell": ell, "minimum": val, "floor": floor})
        man.check(f"ell={ell}: minimum >= floor", val >= floor, f"{val:.6g} >= {floor:.6g}")
    man.tables["lemma33"] = rows


def suite_mu_calculus(p, seed, man):
    from .measure import claim32_bound, mu_disc, mu_ring, mu_ring_numeric

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(p["rings"]):
        a = math.exp(rng.uniform(-5, 5))
        b = a * math.exp(rng.uniform(0, 6))
        worst = max(worst, abs(mu_ring_numeric(a, b) - mu_ring(a, b)))
    man.check(f"ring quadrature within 1e-9 on {p['rings']} rings", worst <= 1e-9, f"max error {worst:.3e}")
    bad = []
    for _ in range(p["discs"]):
        a = math.exp(rng.uniform(-4, 6))
        rho = a * rng.uniform(1e-6, 1 - 1e-6)
        th = rng.uniform(0, 2 * math.pi)
        D = Disc(a * math.cos(th), a * math.sin(th), rho)
        if mu_disc(D) < claim32_bound(rho, a):
            bad.append((a, rho))
    man.check(f"mu(D) >= claim bound on {p['discs']} discs", not bad, f"{len(bad)} violations")


def suite_bucket_machinery(p, seed, man):
    from .buckets import BucketAnalysis, greedy_traces, verify_jump_lemma, wreach_bucket_histogram
    from .constructions import gen_multigrid_coin

    d = p["d"]
    inst = gen_multigrid_coin(d)
    man.input_hashes[f"multigrid d={d}"] = digest(inst.model.to_document())
    u = inst.root
    model = normalize(inst.model, u)
    order = koebe_ordering(model)
    an = BucketAnalysis(inst.graph, model, order, d, u)
    man.check("root lies in bucket 0", an.part.index[u] == 0)
    tr = greedy_traces(inst.graph, model, order, d, u, an)
    man.check(f"p <= {d}", tr.p <= d, f"p = {tr.p}, major trace {tr.major}")
    man.check(
        "p_t <= d - t for every t",
        all(tr.p_t(t) <= d - t for t in range(tr.p)),
        f"p_t = {[tr.p_t(t) for t in range(tr.p)]}",
    )
    man.check(f"|L| <= {(d + 1) ** 2}", len(tr.occupied) <= (d + 1) ** 2, f"|L| = {len(tr.occupied)}")
    man.check("L inside the greedy cover", set(tr.occupied) <= tr.cover(), ", ".join(tr.problems))
    jr = verify_jump_lemma(inst.graph, model, order, d, u, an, strict=False)
    man.check("jump lemma on all triples", jr.ok, f"{len(jr.triples)} triples, {len(jr.violations)} violations")
    h = wreach_bucket_histogram(inst.graph, model, order, d, u)
    man.check("1 + r <= a <= 2dr on WReach", not h.violations, f"{len(h.witnesses)} vertices checked")
    man.tables["wreach_buckets"] = [{"bucket": b, "count": c} for b, c in h.counts.items()]


def suite_packing_solver(p, seed, man):
    from .families import icosahedron, k4, wheel
    from .graph import trace_faces
    from .packing import pack

    model, _ = pack(k4())
    want = 1 / (3 + 2 * math.sqrt(3))
    inner = float(min(model.r))
    man.check("K4 interior radius (Descartes)", abs(inner - want) <= 1e-6, f"{inner!r} vs {want!r}")
    w6 = wheel(6)
    rim = next(i for i, f in enumerate(trace_faces(w6).faces) if 0 not in f)
    model, _ = pack(w6, outer=rim)
    hub = float(model.r[0]) / float(model.r[1])
    man.check("W6 hub radius equals rim radius", abs(hub - 1) <= 1e-10, f"ratio {hub!r}")
    model, sol = pack(icosahedron())
    man.check("icosahedron tangency residual <= 1e-8", sol.tangency_residual <= 1e-8, f"{sol.tangency_residual:.3e}")


SUITES = {
    "scol-exact-bound": (suite_scol_exact_bound, {
        "sizes": [25, 50, 100, 200, 500], "seeds": 4, "ds": [1, 2, 4, 8, 16, 32]}),
    "grid-scol": (suite_grid_scol, {"ds": [14, 26, 38]}),
    "multigrid-wcol": (suite_multigrid_wcol, {"d": 28, "n": 532}),
    "adm-lower": (suite_adm_lower, {"ks": [2, 3], "ds": [32, 64], "orderings": 100, "exact_ks": [2]}),
    "grid-scol-lower": (suite_grid_scol_lower, {"exhaustive": [3], "sampled": [10], "orderings": 1000}),
    "adm-trend": (suite_adm_trend, {"sizes": [250, 500, 1000, 2000], "seeds": 5, "ds": [4, 8, 16, 32, 64]}),
    "lemma33-floor": (suite_lemma33_floor, {"ells": [8, 32, 128, 512, 1024]}),
    "mu-calculus": (suite_mu_calculus, {"rings": 50, "discs": 100}),
    "bucket-machinery": (suite_bucket_machinery, {"d": 28}),
    "packing-solver": (suite_packing_solver, {}),
}


def run_suite(suite: ExperimentSuite | str, params: dict | None = None, seed: int = 0) -> RunManifest:
    if isinstance(suite, str):
        suite = ExperimentSuite(suite, params or {}, seed)
    if suite.suite_id not in SUITES:
        raise InputError(f"unknown suite {suite.suite_id!r}; known: {', '.join(SUITES)}")
    fn, defaults = SUITES[suite.suite_id]
    unknown = set(suite.params) - set(defaults)
    if unknown:
        raise InputError(f"unknown parameters for {suite.suite_id}: {sorted(unknown)}")
    p = {**defaults, **suite.params}
    man = RunManifest(suite.suite_id, __version__, suite.seed, p)
    t0 = time.perf_counter()
    fn(p, suite.seed, man)
    man.wall_clock = time.perf_counter() - t0
    man.input_hashes = dict(sorted(man.input_hashes.items()))
    if suite.out is not None:
        out = Path(suite.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{suite.suite_id}.manifest.json").write_text(json.dumps(man.to_document(), indent=2, default=str))
    return man
