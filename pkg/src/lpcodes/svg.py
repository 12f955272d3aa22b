"""Deterministic SVG rendering of 2-D polyominoes and tilings.

Each lattice point becomes the closed unit square centered on it, so a
ball drawing is the polyomino T_p^2(r) and a set of placements is drawn
as one filled square union per tile.  Output is plain text built in a
fixed order with a fixed palette: identical inputs give identical bytes.
"""

__all__ = ["render_points", "render_placements", "render_lattice_tiling"]

SCALE = 20  # pixels per lattice unit

PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)


def _header(xmin, ymin, xmax, ymax):
    w = (xmax - xmin + 1) * SCALE
    h = (ymax - ymin + 1) * SCALE
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
    )


def _square(x, y, xmin, ymax, fill):
    # svg y grows downward; flip so the lattice y-axis points up
    px = (x - xmin) * SCALE
    py = (ymax - y) * SCALE
    return (
        f'<rect x="{px}" y="{py}" width="{SCALE}" height="{SCALE}" '
        f'fill="{fill}" stroke="#ffffff" stroke-width="1"/>\n'
    )


def _dot(x, y, xmin, ymax):
    px = (x - xmin) * SCALE + SCALE // 2
    py = (ymax - y) * SCALE + SCALE // 2
    return f'<circle cx="{px}" cy="{py}" r="2" fill="#000000"/>\n'


def _bounds(cells):
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    return min(xs), min(ys), max(xs), max(ys)


def render_points(points, fill=PALETTE[0]):
    """SVG of a single 2-D point set as a polyomino with a dotted center."""
    pts = [tuple(p) for p in points]
    if any(len(p) != 2 for p in pts):
        raise ValueError("only 2-D point sets can be rendered")
    xmin, ymin, xmax, ymax = _bounds(pts)
    parts = [_header(xmin, ymin, xmax, ymax)]
    for x, y in sorted(pts):
        parts.append(_square(x, y, xmin, ymax, fill))
    if (0, 0) in pts:
        parts.append(_dot(0, 0, xmin, ymax))
    parts.append("</svg>\n")
    return "".join(parts)


def render_placements(footprint_points, centers):
    """SVG of translated copies of one footprint, one palette color each."""
    foot = [tuple(p) for p in footprint_points]
    ctrs = [tuple(c) for c in centers]
    if any(len(c) != 2 for c in ctrs) or any(len(p) != 2 for p in foot):
        raise ValueError("only 2-D tilings can be rendered")
    cells = [(cx + px, cy + py) for cx, cy in ctrs for px, py in foot]
    xmin, ymin, xmax, ymax = _bounds(cells)
    parts = [_header(xmin, ymin, xmax, ymax)]
    for i, (cx, cy) in enumerate(ctrs):
        fill = PALETTE[i % len(PALETTE)]
        for px, py in foot:
            parts.append(_square(cx + px, cy + py, xmin, ymax, fill))
    for cx, cy in ctrs:
        parts.append(_dot(cx, cy, xmin, ymax))
    parts.append("</svg>\n")
    return "".join(parts)


def render_lattice_tiling(footprint_points, basis, window=3):
    """SVG of the tiling by a lattice kernel: tiles at all lattice points
    whose coordinates of the combination vector lie in [-window, window]."""
    if len(basis) != 2 or any(len(r) != 2 for r in basis):
        raise ValueError("only 2-D lattices can be rendered")
    centers = []
    for a in range(-window, window + 1):
        for b in range(-window, window + 1):
            centers.append(
                (
                    a * basis[0][0] + b * basis[1][0],
                    a * basis[0][1] + b * basis[1][1],
                )
            )
    return render_placements(footprint_points, sorted(centers))
