"""Deterministic SVG drawings of decompositions, optionally with the reflex arcs
and the blocking witnesses overlaid."""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .decomposition import SkeletonGraph


@dataclass(frozen=True)
class SvgOptions:
    size: int = 600
    margin: int = 40
    arcs: bool = False
    witnesses: bool = False
    labels: tuple[str, ...] | None = None


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def render_svg(g: SkeletonGraph, options: SvgOptions | None = None) -> str:
    opts = options or SvgOptions()
    pts = g.points
    xs = [float(p.x) for p in pts]
    ys = [float(p.y) for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = (opts.size - 2 * opts.margin) / span

    def tx(p):
        # y axis flipped so the drawing has the usual orientation
        return (opts.margin + (float(p[0]) - x0) * scale, opts.size - opts.margin - (float(p[1]) - y0) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.size}" height="{opts.size}" '
        f'viewBox="0 0 {opts.size} {opts.size}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7" markerHeight="7" orient="auto">',
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#c0392b"/>',
        "</marker>",
        "</defs>",
        f'<rect width="{opts.size}" height="{opts.size}" fill="white"/>',
    ]

    if opts.witnesses:
        from .arc_graph import build_arc_graph, compute_N

        for (u, v), w in sorted(compute_N(g, build_arc_graph(g)).items()):
            ax, ay = tx(pts[w.x])
            bx, by = tx(w.u_t)
            cx, cy = tx(pts[u])
            yx, yy = tx(pts[w.y])
            out.append(
                f'<polygon class="witness" points="{_fmt(ax)},{_fmt(ay)} {_fmt(bx)},{_fmt(by)} {_fmt(cx)},{_fmt(cy)}" '
                'fill="#f5b041" fill-opacity="0.35" stroke="none"/>'
            )
            out.append(
                f'<line class="ray" x1="{_fmt(yx)}" y1="{_fmt(yy)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
                'stroke="#e67e22" stroke-width="1" stroke-dasharray="4 3"/>'
            )
            out.append(f'<circle class="u_t" cx="{_fmt(bx)}" cy="{_fmt(by)}" r="3" fill="#e67e22"/>')

    hull_edges = g.base.hull_edges
    for a, b in g.sorted_edges:
        (ax, ay), (bx, by) = tx(pts[a]), tx(pts[b])
        width = 2 if (a, b) in hull_edges else 1.2
        out.append(
            f'<line class="edge" x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
            f'stroke="black" stroke-width="{width}"/>'
        )

    if opts.arcs:
        from .arc_graph import build_arc_graph

        for u, v in build_arc_graph(g).sorted_arcs():
            (ax, ay), (bx, by) = tx(pts[u]), tx(pts[v])
            # short arrow leaving the reflex tail along the edge
            ex, ey = ax + 0.4 * (bx - ax), ay + 0.4 * (by - ay)
            out.append(
                f'<line class="arc" x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(ex)}" y2="{_fmt(ey)}" '
                f'stroke="#c0392b" stroke-width="2" marker-end="url(#arrow)"><title>{u} -&gt; {v}</title></line>'
            )

    for i, p in enumerate(pts):
        x, y = tx(p)
        fill = "black" if g.base.is_hull_vertex(i) else "#2e86c1"
        label = opts.labels[i] if opts.labels else str(i)
        out.append(f'<circle class="point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{fill}"/>')
        out.append(
            f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" font-family="sans-serif" font-size="12">{escape(label)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
