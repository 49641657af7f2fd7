"""Disc diagrams as plain SVG text."""
from __future__ import annotations

from .geometry import CoinModel
from .graph import VertexOrdering


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _rank_colour(rank: int, n: int) -> str:
    # Large discs (early in the ordering) dark blue, small ones pale.
    t = 0.0 if n <= 1 else rank / (n - 1)
    r = int(40 + 200 * t)
    g = int(70 + 170 * t)
    return f"#{r:02x}{g:02x}ff"


def render_svg(model: CoinModel, order: VertexOrdering | None = None, highlight=None, size: int = 800) -> str:
    highlight = set(highlight or ())
    if model.n == 0:
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 1 1"></svg>\n'
        )
    xmin = float((model.x - model.r).min())
    xmax = float((model.x + model.r).max())
    ymin = float((model.y - model.r).min())
    ymax = float((model.y + model.r).max())
    span = max(xmax - xmin, ymax - ymin) or 1.0
    pad = 0.02 * span
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_fmt(xmin - pad)} {_fmt(-ymax - pad)} {_fmt(span + 2 * pad)} {_fmt(span + 2 * pad)}">'
    ]
    stroke = _fmt(span / 1000)
    for v in range(model.n):
        fill = "none" if order is None else _rank_colour(order.rank[v], model.n)
        if v in highlight:
            fill = "#e4572e"
        # y is flipped so the picture has the usual orientation.
        lines.append(
            f'<circle id="v{v}" cx="{_fmt(model.x[v])}" cy="{_fmt(-model.y[v])}" r="{_fmt(model.r[v])}" '
            f'fill="{fill}" stroke="black" stroke-width="{stroke}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
