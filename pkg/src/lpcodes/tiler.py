"""Bounded-region tiling search and the integer-radius non-tiling criteria.

Tilings of R^n by the polyomino of a discrete ball correspond to exact
covers of Z^n by translated balls, so non-tiling evidence can be
machine-checked on a finite window: if no placement set with globally
disjoint tiles covers [-E, E]^n while containing the tile at the origin,
then no tiling of the whole space exists (translating any tiling moves
one tile's center to the origin).

The closed-form criteria cover the asymptotic regime: once the ball is
pointed enough that (r-1)^p + 2^p <= r^p (plane) or the n-dimensional
analogue holds, the neighborhood that must surround an endpoint cannot
be completed, independently of any search window.
"""

from dataclasses import dataclass

from .geometry import INF, enumerate_ball

__all__ = [
    "PolyominoPlacement",
    "TileResult",
    "classify_point",
    "excludes_plane_tiling",
    "excludes_space_tiling",
    "tile_region",
]


def _integer_radius_of(footprint):
    r = footprint.radius.integer_radius()
    if r is None:
        raise ValueError("footprint radius is not an integer")
    return r


def classify_point(footprint, x):
    """endpoint / ordinary / outside relative to a ball of integer radius.

    Endpoints are the extreme points +-r e_i; they are the only ball
    points all of whose sideways neighbors leave the ball, which is what
    the region arguments lever.
    """
    r = _integer_radius_of(footprint)
    n = footprint.dimension
    if len(x) != n:
        raise ValueError("dimension mismatch")
    if not footprint.contains(x):
        return "outside"
    if sum(1 for c in x if c) == 1 and max(abs(c) for c in x) == r:
        return "endpoint"
    return "ordinary"


def _power(base, p):
    if isinstance(p, int):
        return base**p
    return float(base) ** p


def excludes_plane_tiling(r, p):
    """True when no tiling of R^2 by the radius-r polyomino can exist.

    Exact integer arithmetic for integer p; the criterion is r > 2
    together with (r-1)^p + 2^p <= r^p.
    """
    if r < 1 or int(r) != r:
        raise ValueError("radius must be a positive integer")
    if not p > 1:
        raise ValueError("exponent must exceed 1")
    r = int(r)
    return r > 2 and _power(r - 1, p) + _power(2, p) <= _power(r, p)


def excludes_space_tiling(n, r, p):
    """The n >= 3 analogue: r > 2 and (n-1)(r-1)^p + (r-2)^p <= r^p."""
    if n < 3:
        raise ValueError("use excludes_plane_tiling for n = 2")
    if r < 1 or int(r) != r:
        raise ValueError("radius must be a positive integer")
    r = int(r)
    return r > 2 and (n - 1) * _power(r - 1, p) + _power(r - 2, p) <= _power(r, p)


@dataclass(frozen=True)
class PolyominoPlacement:
    """One translated copy of the shared footprint."""

    center: tuple
    footprint: object

    def cells(self):
        return [tuple(c + d for c, d in zip(self.center, v)) for v in self.footprint.points]


@dataclass(frozen=True)
class TileResult:
    """Outcome of the bounded-region search.

    completed carries the placements; impossible carries only the node
    count, which together with the deterministic traversal order is the
    reproducible certificate; inconclusive means the budget ran out.
    """

    status: str  # completed | impossible | inconclusive
    extent: int
    footprint: object
    placements: tuple
    nodes: int

    def to_json(self):
        return {
            "status": self.status,
            "extent": self.extent,
            "n": self.footprint.dimension,
            "p": self.footprint.radius.json_p(),
            "s": self.footprint.radius.power_value,
            "centers": [list(p.center) for p in self.placements]
            if self.status == "completed"
            else None,
            "nodes": self.nodes,
        }


def tile_region(footprint, extent, budget=10**7):
    """Exact-cover search for [-extent, extent]^n by translates of the ball.

    The origin tile is pre-placed; candidate centers range over
    [-extent-r, extent+r]^n so no boundary-crossing tile is missed, and
    tiles must be disjoint everywhere (not only inside the region), as
    the restriction of any genuine tiling would be.  Backtracking always
    branches on the lexicographically least uncovered region cell, so
    node counts are reproducible.
    """
    n = footprint.dimension
    r = _integer_radius_of(footprint)
    if extent < 1:
        raise ValueError("extent must be positive")

    span = extent + 2 * r  # cells any candidate tile can touch
    width = 2 * span + 1

    def cell_bit(pt):
        idx = 0
        for c in pt:
            idx = idx * width + (c + span)
        return 1 << idx

    region_cells = enumerate_ball(n, _sup_token(extent)).points
    region_bits = [(pt, cell_bit(pt)) for pt in region_cells]  # lex order
    region_mask = 0
    for _, bit in region_bits:
        region_mask |= bit

    centers = enumerate_ball(n, _sup_token(extent + r)).points
    masks = {}
    by_cell = {}  # region cell -> centers whose tile covers it
    for c in centers:
        mask = 0
        for v in footprint.points:
            mask |= cell_bit(tuple(a + b for a, b in zip(c, v)))
        if mask & region_mask == 0:
            continue
        masks[c] = mask
        for v in footprint.points:
            pt = tuple(a + b for a, b in zip(c, v))
            if all(abs(a) <= extent for a in pt):
                by_cell.setdefault(pt, []).append(c)

    origin = (0,) * n
    nodes = 0
    chosen = [origin]
    status = None

    def least_uncovered(occupied):
        for pt, bit in region_bits:
            if not occupied & bit:
                return pt
        return None

    def dfs(occupied):
        nonlocal nodes, status
        target = least_uncovered(occupied)
        if target is None:
            return True
        for c in by_cell.get(target, ()):
            mask = masks[c]
            if mask & occupied:
                continue
            nodes += 1
            if nodes > budget:
                status = "inconclusive"
                return False
            chosen.append(c)
            if dfs(occupied | mask):
                return True
            if status == "inconclusive":
                return False
            chosen.pop()
        return False

    if dfs(masks[origin]):
        placements = tuple(PolyominoPlacement(c, footprint) for c in chosen)
        return TileResult("completed", extent, footprint, placements, nodes)
    if status == "inconclusive":
        return TileResult("inconclusive", extent, footprint, (), nodes)
    return TileResult("impossible", extent, footprint, (), nodes)


def _sup_token(r):
    from .geometry import RadiusToken

    return RadiusToken(INF, r)
