"""Superimposition diagrams: ASCII for terminals, SVG for everything else.

Both renderers draw the union of the start shape and the placed image
with three marks: coins that stay (overlap), coins that must move out
(start only), and the holes they move into (image only).
"""

from __future__ import annotations

from coinflip.lattice import Coord, embed

ASCII_GLYPHS = {"stay": "O", "source": ".", "target": "*"}

ASCII_LEGEND = "legend: O = stays put   . = must move   * = destination"


def classify_cells(start, target) -> dict[Coord, str]:
    start = frozenset(Coord(a, b) for a, b in start)
    target = frozenset(Coord(a, b) for a, b in target)
    cells = {}
    for c in start | target:
        if c in start and c in target:
            cells[c] = "stay"
        elif c in start:
            cells[c] = "source"
        else:
            cells[c] = "target"
    return cells


def ascii_diagram(start, target) -> str:
    """Character grid of the superimposition.

    Each lattice row (constant b) gets one text line, shifted half a cell
    per row so the layout mimics penny packing: column = 2a + b.
    """
    cells = classify_cells(start, target)
    min_col = min(2 * a + b for a, b in cells)
    max_col = max(2 * a + b for a, b in cells)
    b_lo = min(b for _, b in cells)
    b_hi = max(b for _, b in cells)
    lines = []
    for b in range(b_hi, b_lo - 1, -1):
        line = [" "] * (max_col - min_col + 1)
        for (a, bb), kind in cells.items():
            if bb == b:
                line[2 * a + bb - min_col] = ASCII_GLYPHS[kind]
        lines.append("".join(line).rstrip())
    return "\n".join(lines)


_SVG_STYLE = """\
    .stay { fill: #1a1a1a; }
    .source { fill: #ffffff; stroke: #1a1a1a; stroke-width: 0.06; }
    .target { fill: #2f9e44; }"""


def svg_diagram(start, target) -> str:
    """SVG with unit-diameter circles at the exact lattice embedding."""
    cells = classify_cells(start, target)
    placed = []
    for c in sorted(cells):
        x, y = embed(c)
        placed.append((x, -y, cells[c]))  # svg y axis points down
    xs = [p[0] for p in placed]
    ys = [p[1] for p in placed]
    x0, y0 = min(xs) - 1.0, min(ys) - 1.0
    width = max(xs) - min(xs) + 2.0
    height = max(ys) - min(ys) + 3.2  # room for the legend row
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.4f} {y0:.4f} {width:.4f} {height:.4f}" '
        f'width="{width * 24:.0f}" height="{height * 24:.0f}">',
        f"  <style>\n{_SVG_STYLE}\n  </style>",
    ]
    for x, y, kind in placed:
        out.append(
            f'  <circle class="{kind}" cx="{x:.4f}" cy="{y:.4f}" r="0.5"/>'
        )
    legend_y = max(ys) + 1.6
    for dx, kind, label in (
        (0.0, "stay", "stays"),
        (2.5, "source", "moves"),
        (5.0, "target", "destination"),
    ):
        out.append(
            f'  <circle class="{kind}" cx="{min(xs) + dx:.4f}" '
            f'cy="{legend_y:.4f}" r="0.35"/>'
        )
        out.append(
            f'  <text x="{min(xs) + dx + 0.55:.4f}" y="{legend_y + 0.18:.4f}" '
            f'font-size="0.5" font-family="sans-serif">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out)
