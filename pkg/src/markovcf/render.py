"""Deterministic ASCII and SVG drawings of snake graphs."""

from __future__ import annotations

from .snake import SnakeGraph, christoffel_word

UNIT = 40  # px per lattice unit
MARGIN = 20

SVG_HEAD = (
    '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
    '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
    '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
)


def _extent(g: SnakeGraph) -> tuple[int, int]:
    """Size of the (q, p) rectangle in lattice units."""
    if g.index is not None:
        return g.index.q, g.index.p
    xs = [x for x, _ in g.tiles]
    ys = [y for _, y in g.tiles]
    return (max(xs) + 2) // 2, (max(ys) + 2) // 2


def render_ascii(g: SnakeGraph) -> str:
    """One character per half-unit cell, top row first.

    ``#`` shaded tile, ``o`` unshaded tile, ``.`` empty.
    """
    w, h = _extent(g)
    cells = {t: "#" if s else "o" for t, s in zip(g.tiles, g.shaded)}
    rows = []
    for y in range(2 * h - 1, -1, -1):
        rows.append("".join(cells.get((x, y), ".") for x in range(2 * w)))
    return "\n".join(rows) + "\n"


def _fmt(v: float) -> str:
    return f"{v:g}"


def render_svg(g: SnakeGraph) -> str:
    """SVG 1.1 drawing: grid, diagonal, lattice path and tiles.

    One lattice unit is 40px with the origin at the bottom left.
    """
    w, h = _extent(g)
    width, height = w * UNIT + 2 * MARGIN, h * UNIT + 2 * MARGIN

    def px(x2: int, y2: int) -> tuple[str, str]:
        # half-unit input coordinates
        return _fmt(MARGIN + x2 * UNIT / 2), _fmt(MARGIN + (2 * h - y2) * UNIT / 2)

    out = [SVG_HEAD]
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">\n'
    )
    out.append('<g class="grid" stroke="#bbbbbb" stroke-width="1">\n')
    for x in range(w + 1):
        x1, y1 = px(2 * x, 0)
        x2, y2 = px(2 * x, 2 * h)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>\n')
    for y in range(h + 1):
        x1, y1 = px(0, 2 * y)
        x2, y2 = px(2 * w, 2 * y)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>\n')
    out.append("</g>\n")

    out.append('<g class="snake" stroke="#000000" stroke-width="1">\n')
    half = _fmt(UNIT / 2)
    for (x, y), s in zip(g.tiles, g.shaded):
        # rect anchors at its top-left corner
        rx, ry = px(x, y + 1)
        cls, fill = ("tile shaded", "#3060c0") if s else ("tile", "#ffffff")
        out.append(
            f'<rect class="{cls}" x="{rx}" y="{ry}" width="{half}" height="{half}" fill="{fill}"/>\n'
        )
    out.append("</g>\n")

    x1, y1 = px(0, 0)
    x2, y2 = px(2 * w, 2 * h)
    out.append(
        f'<line class="diagonal" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        'stroke="#000000" stroke-width="1.5"/>\n'
    )
    if g.index is not None:
        pts = [(0, 0)]
        x = y = 0
        for c in christoffel_word(g.index):
            x, y = (x + 2, y) if c == "R" else (x, y + 2)
            pts.append((x, y))
        coords = " ".join(",".join(px(a, b)) for a, b in pts)
        out.append(
            f'<polyline class="path" points="{coords}" fill="none" '
            'stroke="#d02020" stroke-width="3"/>\n'
        )
    out.append("</svg>\n")
    return "".join(out)


def render(g: SnakeGraph, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(g)
    if fmt == "svg":
        return render_svg(g)
    raise ValueError(f"unknown render format {fmt!r}")
