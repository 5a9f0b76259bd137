"""Independent homology oracle: mod-2 simplicial ranks vs cubical counts.

Used to validate, at desk scale, that the nerve of a family of closed
convex regions and the union of that family carry the same (b0, b1).
Rank agreement over Z/2 stands in for homotopy equivalence, which is not
finitely checkable here.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .division import Frame
from .errors import (
    CollectionTooLarge,
    EmptyCollection,
    FrameTooSmall,
    NonConvexRegion,
    NotDownwardClosed,
)
from .geometry import (
    Point2,
    cross_value,
    segment_segment_distance_sq,
)
from .nerves import Region, SimplicialComplex, nerve


@dataclass(frozen=True)
class BoundaryMatrix:
    """Incidence of d-simplices (columns) over (d-1)-simplices (rows), mod 2."""

    rows: Tuple[FrozenSet[int], ...]
    cols: Tuple[FrozenSet[int], ...]
    columns: Tuple[int, ...]  # bitmask per column over row indices


def boundary_matrix(sc: SimplicialComplex, d: int) -> BoundaryMatrix:
    rows = sc.simplices_of_dim(d - 1)
    cols = sc.simplices_of_dim(d)
    row_index = {s: i for i, s in enumerate(rows)}
    columns = []
    for col in cols:
        mask = 0
        for v in col:
            facet = col - {v}
            mask |= 1 << row_index[facet]
        columns.append(mask)
    return BoundaryMatrix(rows=rows, cols=cols, columns=tuple(columns))


def _gf2_rank(vectors: Sequence[int]) -> int:
    pivots: Dict[int, int] = {}
    rank = 0
    for vec in vectors:
        cur = vec
        while cur:
            lead = cur.bit_length() - 1
            if lead in pivots:
                cur ^= pivots[lead]
            else:
                pivots[lead] = cur
                rank += 1
                break
    return rank


def z2_betti(sc: SimplicialComplex) -> Tuple[int, int]:
    """(b0, b1) of the complex over Z/2, from boundary-matrix ranks.

    Simplices above dimension 2 are ignored; the 2-skeleton determines
    both ranks.
    """
    if not sc.is_downward_closed():
        raise NotDownwardClosed("simplex set is not closed under taking faces")
    n0 = len(sc.simplices_of_dim(0))
    n1 = len(sc.simplices_of_dim(1))
    rank1 = _gf2_rank(boundary_matrix(sc, 1).columns)
    rank2 = _gf2_rank(boundary_matrix(sc, 2).columns)
    b0 = n0 - rank1
    b1 = n1 - rank1 - rank2
    return (b0, b1)


@dataclass
class Bitmap:
    """Raster of set pixels over a frame; pixel (i, j) is column i, row j."""

    width: int
    height: int
    resolution: int
    frame: Frame
    bits: Set[Tuple[int, int]]

    def pixel_center(self, i: int, j: int) -> Point2:
        return Point2(
            self.frame.lo.x + Fraction(2 * i + 1, 2 * self.resolution),
            self.frame.lo.y + Fraction(2 * j + 1, 2 * self.resolution),
        )


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor_fraction(x: Fraction) -> int:
    return x.numerator // x.denominator


def rasterize(regions: Sequence[Region], frame: Frame, resolution: int) -> Bitmap:
    """Set a pixel iff its center lies in the closed union of the regions."""
    if resolution < 4:
        raise ValueError(f"resolution must be at least 4 pixels per unit, got {resolution}")
    for r in regions:
        for p in r.boundary_vertices():
            if not frame.contains(p):
                raise FrameTooSmall(f"region vertex {p} falls outside the frame")
    width = _ceil_fraction((frame.hi.x - frame.lo.x) * resolution)
    height = _ceil_fraction((frame.hi.y - frame.lo.y) * resolution)
    bits: Set[Tuple[int, int]] = set()
    for r in regions:
        bx0, by0, bx1, by1 = r.bbox
        i0 = max(0, _ceil_fraction((bx0 - frame.lo.x) * resolution - Fraction(1, 2)))
        i1 = min(width - 1, _floor_fraction((bx1 - frame.lo.x) * resolution - Fraction(1, 2)))
        j0 = max(0, _ceil_fraction((by0 - frame.lo.y) * resolution - Fraction(1, 2)))
        j1 = min(height - 1, _floor_fraction((by1 - frame.lo.y) * resolution - Fraction(1, 2)))
        for j in range(j0, j1 + 1):
            cy = frame.lo.y + Fraction(2 * j + 1, 2 * resolution)
            for i in range(i0, i1 + 1):
                if (i, j) in bits:
                    continue
                cx = frame.lo.x + Fraction(2 * i + 1, 2 * resolution)
                if r.contains(Point2(cx, cy)):
                    bits.add((i, j))
    return Bitmap(width=width, height=height, resolution=resolution, frame=frame, bits=bits)


_EIGHT = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1))
_FOUR = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _components(cells: Set[Tuple[int, int]], moves) -> List[Set[Tuple[int, int]]]:
    seen: Set[Tuple[int, int]] = set()
    comps = []
    for start in cells:
        if start in seen:
            continue
        comp = set()
        queue = deque([start])
        seen.add(start)
        while queue:
            i, j = queue.popleft()
            comp.add((i, j))
            for di, dj in moves:
                nxt = (i + di, j + dj)
                if nxt in cells and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        comps.append(comp)
    return comps


def cubical_betti(b: Bitmap) -> Tuple[int, int]:
    """(components, bounded holes) of the raster.

    Set pixels connect 8-ways, unset pixels 4-ways; the asymmetric pair
    avoids the checkerboard paradox.  A hole is an unset component that
    never touches the bitmap border.
    """
    comps = _components(b.bits, _EIGHT)
    unset = {
        (i, j)
        for i in range(b.width)
        for j in range(b.height)
        if (i, j) not in b.bits
    }
    holes = 0
    for comp in _components(unset, _FOUR):
        touches = any(
            i == 0 or j == 0 or i == b.width - 1 or j == b.height - 1 for i, j in comp
        )
        if not touches:
            holes += 1
    return (len(comps), holes)


def is_convex_loop(points: Sequence[Point2]) -> bool:
    """All turns along the closed loop agree in sign (collinear runs allowed)."""
    n = len(points)
    if n < 3:
        return False
    signs = set()
    for i in range(n):
        det = cross_value(points[i], points[(i + 1) % n], points[(i + 2) % n])
        if det > 0:
            signs.add(1)
        elif det < 0:
            signs.add(-1)
    return len(signs) == 1


def min_boundary_clearance_sq(regions: Sequence[Region]) -> Optional[Fraction]:
    """Exact minimum squared distance between boundaries of distinct regions.

    Zero when two boundaries meet; None for fewer than two regions.
    """
    best: Optional[Fraction] = None
    for i, r1 in enumerate(regions):
        for r2 in regions[i + 1 :]:
            for a, b in r1.boundary_segments():
                for c, d in r2.boundary_segments():
                    dist = segment_segment_distance_sq(a, b, c, d)
                    if best is None or dist < best:
                        best = dist
                    if best == 0:
                        return best
    return best


@dataclass(frozen=True)
class NerveCheckReport:
    region_count: int
    resolution: int
    nerve_betti: Tuple[int, int]
    union_betti: Tuple[int, int]
    min_clearance_sq: Optional[Fraction]

    @property
    def passed(self) -> bool:
        return self.nerve_betti == self.union_betti

    def lines(self) -> List[str]:
        return [
            f"regions={self.region_count} resolution={self.resolution} passed={str(self.passed).lower()}",
            f"  nerve  b0={self.nerve_betti[0]} b1={self.nerve_betti[1]}",
            f"  union  b0={self.union_betti[0]} b1={self.union_betti[1]}",
            f"  min_boundary_clearance_sq={self.min_clearance_sq}",
        ]


def nerve_theorem_check(
    regions: Sequence[Region], frame: Frame, resolution: int
) -> NerveCheckReport:
    """Compare nerve ranks with raster ranks of the union of convex regions."""
    if not regions:
        raise EmptyCollection("nothing to check")
    if len(regions) > 20:
        raise CollectionTooLarge(f"check capped at 20 regions, got {len(regions)}")
    for r in regions:
        if r.excluded or len(r.loops) != 1 or not is_convex_loop(r.loops[0]):
            raise NonConvexRegion(f"region {r.label or '?'} is not a closed convex polygon")
    sc = nerve(regions)
    nerve_ranks = z2_betti(sc)
    union_ranks = cubical_betti(rasterize(regions, frame, resolution))
    return NerveCheckReport(
        region_count=len(regions),
        resolution=resolution,
        nerve_betti=nerve_ranks,
        union_betti=union_ranks,
        min_clearance_sq=min_boundary_clearance_sq(regions),
    )
