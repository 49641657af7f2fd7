"""SVG disc diagrams: the d=26 grid model, a packed triangulation, one multigrid gadget."""
from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from koebe.constructions import gen_grid_coin, gen_multigrid_coin
from koebe.families import random_triangulation
from koebe.geometry import CoinModel, koebe_ordering
from koebe.packing import pack
from koebe.svg import render_svg


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="figures")
    ap.add_argument("--n", type=int, default=150)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    grid = gen_grid_coin(26)
    (out / "grid_d26.svg").write_text(render_svg(grid.model, koebe_ordering(grid.model), highlight=grid.large))

    model, _ = pack(random_triangulation(args.n, args.seed))
    (out / f"packing_n{args.n}.svg").write_text(render_svg(model, koebe_ordering(model)))

    # Gadgets span 13 orders of magnitude; draw the first two with their interfaces.
    mg = gen_multigrid_coin(28)
    keep = np.array(sorted(v for gd in mg.gadgets[:2] for v in gd.vertices))
    sub = CoinModel(mg.model.x[keep], mg.model.y[keep], mg.model.r[keep])
    (out / "multigrid_first_gadgets.svg").write_text(render_svg(sub, koebe_ordering(sub)))
    print(f"wrote {len(list(out.glob('*.svg')))} figures to {out}/")


if __name__ == "__main__":
    main()
