"""Deterministic SVG rendering of grid graphs."""

from __future__ import annotations

_PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(
    graph,
    highlights: dict[str, tuple[int, ...]] | None = None,
    scale: float = 40.0,
    margin: float = 0.8,
    labels: bool = False,
) -> str:
    """SVG drawing of a grid graph; byte-identical for identical inputs.

    Each highlight is an ordered vertex-index walk drawn as a fat colored
    polyline; every consecutive pair must be an edge of the graph.
    """
    pos = graph.positions()
    edges = set(graph.edge_indices)
    for name in sorted(highlights or {}):
        walk = highlights[name]
        for i in walk:
            if not 0 <= i < graph.n:
                raise ValueError(f"highlight {name!r}: vertex index {i} out of range")
        for a, b in zip(walk, walk[1:]):
            if (min(a, b), max(a, b)) not in edges:
                raise ValueError(f"highlight {name!r}: ({a}, {b}) is not an edge")

    if pos:
        xs = [p[0] for p in pos]
        ys = [p[1] for p in pos]
        x0, x1 = min(xs) - margin, max(xs) + margin
        y0, y1 = min(ys) - margin, max(ys) + margin
    else:
        x0, x1, y0, y1 = 0.0, 1.0, 0.0, 1.0
    width = (x1 - x0) * scale
    height = (y1 - y0) * scale

    def _pt(i: int) -> tuple[float, float]:
        x, y = pos[i]
        return ((x - x0) * scale, (y1 - y) * scale)  # flip y: SVG grows downward

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
    ]
    for u, v in graph.edge_indices:
        (xa, ya), (xb, yb) = _pt(u), _pt(v)
        out.append(
            f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}" '
            f'stroke="#999999" stroke-width="1.5"/>'
        )
    for k, name in enumerate(sorted(highlights or {})):
        color = _PALETTE[k % len(_PALETTE)]
        walk = highlights[name]
        if len(walk) == 1:
            x, y = _pt(walk[0])
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="7.00" '
                f'fill="none" stroke="{color}" stroke-width="3.0"/>'
            )
            continue
        points = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(_pt, walk))
        out.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" '
            f'stroke-width="4.0" stroke-linecap="round" stroke-linejoin="round" '
            f'opacity="0.75"/>'
        )
    for i in range(graph.n):
        x, y = _pt(i)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.00" fill="#222222"/>')
        if labels:
            out.append(
                f'<text x="{_fmt(x + 5)}" y="{_fmt(y - 5)}" font-size="10" '
                f'fill="#555555">{i}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
