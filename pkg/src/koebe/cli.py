"""Command line: koebe <subcommand> ...

Exit codes: 0 ok, 1 bad input, 2 no convergence, 3 budget exhausted,
4 failed assertion or certificate.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .errors import CertificateError, InputError, KoebeError
from .graph import load_graph, load_ordering
from .report import csv_text, dumps, emit, fmt, table_csv


def _model_and_graph(args):
    from .geometry import load_model

    model = load_model(args.model)
    g = load_graph(args.graph) if getattr(args, "graph", None) else None
    if g is not None and g.n != model.n:
        raise InputError(f"graph has {g.n} vertices but the model has {model.n} discs")
    return model, g


def cmd_pack(args) -> int:
    from .packing import SolverConfig, pack

    g = load_graph(args.graph)
    cfg = SolverConfig(tol=args.tol, max_iter=args.max_iter)
    model, sol = pack(g, args.outer, cfg)
    emit(dumps(model.to_document()), args.out)
    print(
        f"n={g.n} iterations={sol.iterations} newton_steps={sol.newton_steps} "
        f"angle_residual={fmt(sol.angle_residual)} tangency_residual={fmt(sol.tangency_residual)}",
        file=sys.stderr if args.out is None else sys.stdout,
    )
    return 0


def cmd_order(args) -> int:
    from .geometry import koebe_ordering, load_model

    order = koebe_ordering(load_model(args.model))
    emit(json.dumps(list(order.order)) + "\n", args.out)
    return 0


def cmd_metrics(args) -> int:
    from .admissibility import adm_vertex
    from .geometry import koebe_ordering, load_model
    from .reach import sreach_all, wreach_all

    g = load_graph(args.graph)
    if (args.ordering is None) == (args.koebe is None):
        raise InputError("give exactly one of --ordering and --koebe")
    order = load_ordering(args.ordering) if args.ordering else koebe_ordering(load_model(args.koebe))
    if len(order.order) != g.n:
        raise InputError(f"ordering has {len(order.order)} ids but the graph has {g.n} vertices")
    d = args.d
    if args.kind in ("wcol", "scol"):
        sizes = (wreach_all if args.kind == "wcol" else sreach_all)(g, order, d).sizes()
        header, rows = ["vertex", args.kind], [(v, s) for v, s in enumerate(sizes)]
        value = max(sizes, default=0)
    else:
        mode = "exact" if args.exact else "bounds"
        certs = [
            adm_vertex(g, order, d, v, mode=mode, strict_length=args.strict_length, budget=args.budget)
            for v in range(g.n)
        ]
        header = ["vertex", "lower", "upper", "exact"]
        rows = [(c.v, c.lower, c.upper, int(c.exact)) for c in certs]
        value = max((c.value if args.exact else c.upper for c in certs), default=0)
    emit(csv_text(header, rows), args.out)
    print(f"{args.kind}_{d} = {value}", file=sys.stderr if args.out is None else sys.stdout)
    return 0


def cmd_gen(args) -> int:
    from . import constructions as C
    from . import families as F

    model = None
    fam = args.family
    if fam == "triangulation":
        g = F.random_triangulation(args.n, seed=args.seed)
    elif fam in ("k3", "k4", "icosahedron"):
        g = getattr(F, fam)()
    elif fam in ("wheel", "cycle", "path", "star"):
        g = getattr(F, fam)(args.n)
    elif fam == "grid-coin":
        inst = C.gen_grid_coin(args.d)
        g, model = inst.graph, inst.model
    elif fam == "multigrid":
        inst = C.gen_multigrid_coin(args.d)
        g, model = inst.graph, inst.model
    elif fam == "adm-lower":
        g = C.gen_adm_lower(args.k).graph
    elif fam == "square-grid":
        g = C.gen_square_grid(args.d)
    else:
        raise InputError(f"unknown family {fam!r}")
    emit(dumps(g.to_document()), args.out)
    if model is not None and args.model_out:
        emit(dumps(model.to_document()), args.model_out)
    return 0


def cmd_measure(args) -> int:
    from .geometry import Disc
    from .measure import MinimizeConfig, claim32_bound, lemma33_floor, lemma33_minimize, mu_disc, mu_ring
    from .measure import mu_ring_numeric

    if args.what == "ring":
        rows = [("closed", mu_ring(args.a, args.b)), ("numeric", mu_ring_numeric(args.a, args.b))]
    elif args.what == "disc":
        D = Disc(args.x, args.y, args.r)
        a = math.hypot(args.x, args.y)
        rows = [("mu", mu_disc(D, args.tol)), ("claim_bound", claim32_bound(args.r, a))]
    elif args.what == "lemma33":
        val, seq = lemma33_minimize(args.ell, MinimizeConfig(seed=args.seed))
        rows = [("minimum", val), ("floor", lemma33_floor(args.ell))]
        rows += [(f"rho_{i + 1}", float(x)) for i, x in enumerate(seq.rho)]
    else:
        raise InputError(f"unknown measure target {args.what!r}")
    emit(csv_text(["quantity", "value"], rows), args.out)
    return 0


def cmd_buckets(args) -> int:
    from .buckets import BucketAnalysis, greedy_traces, verify_jump_lemma, wreach_bucket_histogram
    from .geometry import koebe_ordering, normalize

    model, g = _model_and_graph(args)
    model = normalize(model, args.root)
    order = koebe_ordering(model)
    an = BucketAnalysis(g, model, order, args.d, args.root)
    h = wreach_bucket_histogram(g, model, order, args.d, args.root)
    tr = greedy_traces(g, model, order, args.d, args.root, an)
    jr = verify_jump_lemma(g, model, order, args.d, args.root, an, strict=False)
    emit(csv_text(["bucket", "wreach_count"], sorted(h.counts.items())), args.out)
    print(f"major trace {tr.major}; minor traces {tr.minor}; jump triples {len(jr.triples)}", file=sys.stderr)
    problems = tr.problems + h.violations + [f"jump violation {v}" for v in jr.violations]
    for p in problems:
        print(p, file=sys.stderr)
    return 4 if problems else 0


def cmd_witness(args) -> int:
    from . import constructions as C
    from .graph import ordering_from_ids

    if args.target == "adm-lower":
        inst = C.gen_adm_lower(args.k)
        fams = C.build_witness_families(inst)
        order = load_ordering(args.ordering) if args.ordering else ordering_from_ids(range(inst.graph.n))
        cert = C.trim_witness(fams, inst, order, args.d)
        doc = {"v": cert.v, "d": cert.d, "paths": [list(p) for p in cert.paths]}
    elif args.target == "grid-scol":
        bound, (D, large) = C.grid_scol_certificate(C.gen_grid_coin(args.d))
        doc = {"bound": bound, "root": D, "reached": list(large)}
    elif args.target == "multigrid":
        count, paths = C.multigrid_wcol_certificate(C.gen_multigrid_coin(args.d))
        doc = {"count": count, "paths": {str(v): list(p) for v, p in paths.items()}}
    elif args.target == "square-grid":
        g = C.gen_square_grid(args.d)
        order = load_ordering(args.ordering) if args.ordering else ordering_from_ids(range(g.n))
        count, wit = C.grid_scol_lower_certificate(g, order, args.d)
        doc = {"count": count, "witnesses": [list(w) if isinstance(w, (list, tuple)) else w for w in wit]}
    else:
        raise InputError(f"unknown witness target {args.target!r}")
    emit(dumps(doc), args.out)
    return 0


def cmd_verify(args) -> int:
    from .suites import ExperimentSuite, run_suite

    params = {}
    for item in args.param or []:
        key, _, val = item.partition("=")
        try:
            params[key] = json.loads(val)
        except json.JSONDecodeError as exc:
            raise InputError(f"parameter {key!r} is not valid JSON: {val!r}") from exc
    man = run_suite(ExperimentSuite(args.suite, params, args.seed, args.out))
    for a in man.assertions:
        print(f"{'PASS' if a.passed else 'FAIL'}  {a.name}  {a.detail}")
    for name, rows in man.tables.items():
        print(f"# {name}")
        print(table_csv(rows), end="")
    print(f"suite={man.suite} seed={man.seed} wall_clock={man.wall_clock:.2f}s passed={man.passed}")
    return 0 if man.passed else CertificateError.exit_code


def cmd_render(args) -> int:
    from .geometry import koebe_ordering, load_model
    from .svg import render_svg

    model = load_model(args.model)
    order = load_ordering(args.ordering) if args.ordering else koebe_ordering(model)
    emit(render_svg(model, order, args.highlight, args.size), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="koebe", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("pack", help="coin model of a triangulation")
    p.add_argument("graph")
    p.add_argument("--outer", type=int, default=None, help="outer face index (default 0)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=100000)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_pack)

    p = sub.add_parser("order", help="Koebe ordering of a coin model")
    p.add_argument("model")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_order)

    p = sub.add_parser("metrics", help="per-vertex wcol / scol / adm values")
    p.add_argument("graph")
    p.add_argument("--ordering")
    p.add_argument("--koebe", metavar="MODEL", help="use the Koebe ordering of this coin model")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kind", choices=["wcol", "scol", "adm"], required=True)
    p.add_argument("--exact", action="store_true", help="exact adm search instead of flow bounds")
    p.add_argument("--strict-length", action="store_true")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_metrics)

    p = sub.add_parser("gen", help="generate a graph (and a coin model where one is built in)")
    p.add_argument("family")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--d", type=int, default=14)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--model-out")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("measure", help="mu of rings and discs, the rho-sequence minimum")
    p.add_argument("what", choices=["ring", "disc", "lemma33"])
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=math.e)
    p.add_argument("--x", type=float, default=2.0)
    p.add_argument("--y", type=float, default=0.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--ell", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("buckets", help="radius buckets and greedy traces around a root disc")
    p.add_argument("model")
    p.add_argument("graph")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_buckets)

    p = sub.add_parser("witness", help="certificates for the lower-bound constructions")
    p.add_argument("target", choices=["adm-lower", "grid-scol", "multigrid", "square-grid"])
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--ordering")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("verify", help="run an acceptance suite and write its manifest")
    p.add_argument("suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--param", action="append", metavar="KEY=JSON")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="SVG disc diagram")
    p.add_argument("model")
    p.add_argument("--ordering")
    p.add_argument("--highlight", type=int, nargs="*")
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cmd == "witness" and args.d is None:
        args.d = {"grid-scol": 14, "multigrid": 28, "square-grid": 3}.get(args.target)
    try:
        return args.fn(args)
    except KoebeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return InputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
