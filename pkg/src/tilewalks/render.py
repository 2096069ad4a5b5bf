"""Deterministic SVG rendering of a tiled board with its admissible walks."""

from .boards import TileKind, enumerate_tilings, forbidden_edges, Orientation
from .errors import IndexOutOfRange
from .walks import enumerate_walks

CELL = 60
MARGIN = 30

GRID_STYLE = 'stroke="#bbbbbb" stroke-width="1"'
SQUARE_FILL = "#fff3c4"
DOMINO_FILL = "#c9dff2"
TILE_STYLE = 'stroke="#555555" stroke-width="2"'
FORBIDDEN_STYLE = 'stroke="#d62728" stroke-width="5" stroke-linecap="round"'
WALK_COLORS = ("#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b")


def _vx(x):
    return MARGIN + x * CELL


def _vy(y, rows):
    # flip: board y grows upward, SVG y grows downward
    return MARGIN + (rows - y) * CELL


def svg_for_tiling(board, tiling_index, squares_allowed=True):
    """SVG text for one tiling of the board with all walks overlaid.

    Byte-deterministic for fixed input: enumeration order is deterministic
    and all geometry is integer or fixed-precision.
    """
    tilings = enumerate_tilings(board, squares_allowed)
    if not 0 <= tiling_index < len(tilings):
        raise IndexOutOfRange(
            f"tiling index {tiling_index} outside 0..{len(tilings) - 1}"
        )
    tiling = tilings[tiling_index]
    rows, n = board.rows, board.cols
    width = 2 * MARGIN + max(n, 1) * CELL
    height = 2 * MARGIN + rows * CELL
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
        f'<title>{rows}x{n} board, tiling {tiling_index}</title>',
    ]
    for t in tiling.tiles:
        x0 = _vx(t.col - 1)
        if t.kind == TileKind.SQUARE:
            w, h, fill = CELL, CELL, SQUARE_FILL
            y0 = _vy(t.row, rows)
        elif t.kind == TileKind.HDOMINO:
            w, h, fill = 2 * CELL, CELL, DOMINO_FILL
            y0 = _vy(t.row, rows)
        else:
            w, h, fill = CELL, 2 * CELL, DOMINO_FILL
            y0 = _vy(t.row + 1, rows)
        out.append(
            f'<rect x="{x0}" y="{y0}" width="{w}" height="{h}" '
            f'fill="{fill}" {TILE_STYLE}/>'
        )
    for x in range(n + 1):
        out.append(
            f'<line x1="{_vx(x)}" y1="{_vy(0, rows)}" '
            f'x2="{_vx(x)}" y2="{_vy(rows, rows)}" {GRID_STYLE}/>'
        )
    for y in range(rows + 1):
        out.append(
            f'<line x1="{_vx(0)}" y1="{_vy(y, rows)}" '
            f'x2="{_vx(n)}" y2="{_vy(y, rows)}" {GRID_STYLE}/>'
        )
    for e in sorted(forbidden_edges(tiling), key=lambda e: (e.orientation, e.x, e.y)):
        if e.orientation == Orientation.VERTICAL:
            x1, y1, x2, y2 = e.x, e.y, e.x, e.y + 1
        else:
            x1, y1, x2, y2 = e.x, e.y, e.x + 1, e.y
        out.append(
            f'<line x1="{_vx(x1)}" y1="{_vy(y1, rows)}" '
            f'x2="{_vx(x2)}" y2="{_vy(y2, rows)}" {FORBIDDEN_STYLE}/>'
        )
    walks = enumerate_walks(tiling)
    for i, walk in enumerate(walks):
        # small per-walk offset so overlapping walks stay distinguishable
        off = (i - (len(walks) - 1) / 2) * 4
        x, y = 0, 0
        pts = [(_vx(0) + off, _vy(0, rows) + off)]
        for step in walk:
            if step == "R":
                x += 1
            else:
                y += 1
            pts.append((_vx(x) + off, _vy(y, rows) + off))
        path = " ".join(f"{px:.1f},{py:.1f}" for px, py in pts)
        color = WALK_COLORS[i % len(WALK_COLORS)]
        out.append(
            f'<polyline points="{path}" fill="none" stroke="{color}" '
            f'stroke-width="2.5" stroke-opacity="0.85"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
