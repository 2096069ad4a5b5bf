"""Boards, tiles, tilings and exhaustive tiling enumeration.

Cells are addressed (col, row) with col in 1..n and row in 1..rows.
Grid vertices are (x, y) with x in 0..n and y in 0..rows; walks run from
(0, 0) to (n, rows).
"""

from dataclasses import dataclass, field
from enum import IntEnum
from functools import lru_cache


class TileKind(IntEnum):
    SQUARE = 0
    HDOMINO = 1
    VDOMINO = 2


class Orientation(IntEnum):
    HORIZONTAL = 0
    VERTICAL = 1


class PartialKind(IntEnum):
    """Truncated 2xn board shapes used by the coupled tiling recurrences."""

    A = 0
    C = 1
    D = 2


@dataclass(frozen=True)
class Board:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows not in (1, 2):
            raise ValueError(f"rows must be 1 or 2, got {self.rows}")
        if self.cols < 0:
            raise ValueError(f"cols must be >= 0, got {self.cols}")

    @property
    def cells(self):
        return frozenset(
            (j, r) for j in range(1, self.cols + 1) for r in range(1, self.rows + 1)
        )


@dataclass(frozen=True)
class TilePlacement:
    """A tile anchored at its left (HDomino) or bottom (VDomino) cell."""

    kind: TileKind
    col: int
    row: int

    def covered_cells(self):
        if self.kind == TileKind.SQUARE:
            return ((self.col, self.row),)
        if self.kind == TileKind.HDOMINO:
            return ((self.col, self.row), (self.col + 1, self.row))
        return ((self.col, self.row), (self.col, self.row + 1))

    def sort_key(self):
        return (self.col, self.row, int(self.kind))


@dataclass(frozen=True)
class Tiling:
    """An exact cover of a board region; removed cells model partial boards."""

    board: Board
    tiles: tuple
    removed: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        covered = [c for t in self.tiles for c in t.covered_cells()]
        region = self.board.cells - self.removed
        if len(covered) != len(set(covered)) or set(covered) != region:
            raise ValueError("tiles do not form an exact cover of the region")
        if list(self.tiles) != sorted(self.tiles, key=TilePlacement.sort_key):
            raise ValueError("tiles not in canonical order")

    def dominoes(self):
        return [t for t in self.tiles if t.kind != TileKind.SQUARE]


@dataclass(frozen=True)
class EdgeId:
    """A unit grid-line segment named by its lower/left endpoint."""

    orientation: Orientation
    x: int
    y: int


ALL_KINDS = (TileKind.SQUARE, TileKind.HDOMINO, TileKind.VDOMINO)
DOMINO_KINDS = (TileKind.HDOMINO, TileKind.VDOMINO)


def _cover_region(cells, rows, kinds):
    """Yield every exact cover of `cells` as a sorted tuple of tile triples.

    Recursion always fills the smallest uncovered cell in (col, row) order
    and tries kinds in enum order, so the output stream is already
    lexicographic over canonical tile lists.
    """
    if not cells:
        yield ()
        return
    j, r = min(cells)
    rest = cells - {(j, r)}
    for kind in kinds:
        if kind == TileKind.SQUARE:
            for tail in _cover_region(rest, rows, kinds):
                yield ((kind, j, r),) + tail
        elif kind == TileKind.HDOMINO:
            if (j + 1, r) in rest:
                for tail in _cover_region(rest - {(j + 1, r)}, rows, kinds):
                    yield ((kind, j, r),) + tail
        else:
            if rows == 2 and r == 1 and (j, 2) in rest:
                for tail in _cover_region(rest - {(j, 2)}, rows, kinds):
                    yield ((kind, j, r),) + tail


def _raw_tilings(board, squares_allowed=True):
    """Fast full-board cover stream; yields a live tile list, consume at once.

    Same lexicographic order as _cover_region, but with an in-place
    occupancy array so large brute-force sweeps stay affordable.
    """
    n, rows = board.cols, board.rows
    squares = squares_allowed
    total = n * rows
    occ = bytearray(total + rows)  # slack for HDomino spill past the last column
    tiles = []

    def dfs(pos):
        while pos < total and occ[pos]:
            pos += 1
        if pos == total:
            yield tiles
            return
        j, r = pos // rows + 1, pos % rows + 1
        occ[pos] = 1
        if squares:
            tiles.append((TileKind.SQUARE, j, r))
            yield from dfs(pos + 1)
            tiles.pop()
        if j < n and not occ[pos + rows]:
            occ[pos + rows] = 1
            tiles.append((TileKind.HDOMINO, j, r))
            yield from dfs(pos + 1)
            tiles.pop()
            occ[pos + rows] = 0
        if rows == 2 and r == 1 and not occ[pos + 1]:
            occ[pos + 1] = 1
            tiles.append((TileKind.VDOMINO, j, r))
            yield from dfs(pos + 1)
            tiles.pop()
            occ[pos + 1] = 0
        occ[pos] = 0

    yield from dfs(0)


def _to_tiling(board, raw, removed=frozenset()):
    tiles = tuple(
        sorted((TilePlacement(k, j, r) for k, j, r in raw), key=TilePlacement.sort_key)
    )
    return Tiling(board, tiles, removed)


def enumerate_tilings(board, squares_allowed=True):
    """All exact covers of the board, in deterministic lexicographic order."""
    return [_to_tiling(board, raw) for raw in _raw_tilings(board, squares_allowed)]


@lru_cache(maxsize=None)
def count_tilings(board):
    """Tiling count without materializing tilings.

    1xn boards have F(n+1) tilings; 2xn counts follow
    r(n) = 3r(n-1) + r(n-2) - r(n-3) with 1, 2, 7.
    """
    n = board.cols
    if board.rows == 1:
        a, b = 0, 1  # F(0), F(1)
        for _ in range(n + 1):
            a, b = b, a + b
        return a
    vals = [1, 2, 7]
    if n < 3:
        return vals[n]
    for _ in range(3, n + 1):
        vals.append(3 * vals[-1] + vals[-2] - vals[-3])
    return vals[n]


def forbidden_edges(tiling):
    """The interior edge of every domino; walks may not traverse these."""
    edges = set()
    for t in tiling.tiles:
        if t.kind == TileKind.HDOMINO:
            edges.add(EdgeId(Orientation.VERTICAL, t.col, t.row - 1))
        elif t.kind == TileKind.VDOMINO:
            edges.add(EdgeId(Orientation.HORIZONTAL, t.col - 1, 1))
    return frozenset(edges)


def _partial_setup(board, kind):
    """Removed cells and forced tiles for the A/C/D truncated shapes."""
    n = board.cols
    if kind == PartialKind.A:
        # top-right cell missing, bottom-right pair covered by a domino
        return frozenset({(n, 2)}), ((TileKind.HDOMINO, n - 1, 1),)
    if kind == PartialKind.C:
        # bottom-right cell missing
        return frozenset({(n, 1)}), ()
    # D: bottom-right pair missing, top-right pair covered by a domino
    return frozenset({(n - 1, 1), (n, 1)}), ((TileKind.HDOMINO, n - 1, 2),)


def enumerate_partial_tilings(board, kind):
    """Exact covers of a truncated 2xn board of shape A, C, or D."""
    if board.rows != 2:
        raise ValueError("partial tilings are defined for 2xn boards only")
    n = board.cols
    if n < 1:
        raise ValueError("partial tilings need n >= 1")
    if kind in (PartialKind.A, PartialKind.D) and n < 2:
        return []
    removed, forced = _partial_setup(board, kind)
    free = board.cells - removed
    for k, j, r in forced:
        free = free - set(TilePlacement(k, j, r).covered_cells())
    out = []
    for raw in _cover_region(free, board.rows, ALL_KINDS):
        out.append(_to_tiling(board, forced + raw, removed))
    out.sort(key=lambda t: tuple(tile.sort_key() for tile in t.tiles))
    return out
