"""Planar cell complexes: vertices, edges, filled triangles.

A complex is structurally sound when it satisfies two conditions:
containment (every face of a cell is a cell of the complex) and
intersection (whenever two cell realizations meet, the overlap is a union
of cells of the complex).  :func:`validate_cw` reports violations of both
as data instead of raising.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import DegenerateCell, UnknownCellId
from .geometry import (
    Orientation,
    Point2,
    cross_value,
    on_segment,
    orientation,
    polygon_area2,
    segment_intersection,
)


class CellKind(Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    TRIANGLE = "triangle"


@dataclass(frozen=True)
class Cell:
    kind: CellKind
    vertex_ids: Tuple[str, ...]

    @property
    def dim(self) -> int:
        return len(self.vertex_ids) - 1


class CellComplex:
    """Mutable-while-building container of cells; treat as frozen afterwards."""

    def __init__(self, name: str = ""):
        self.name = name
        self.vertices: Dict[str, Point2] = {}
        self.cells: Dict[str, Cell] = {}
        self._edge_index: Dict[FrozenSet[str], str] = {}

    def add_vertex(self, vid: str, p: Point2) -> str:
        if "--" in vid:
            raise ValueError(f"vertex id {vid!r} may not contain '--'")
        existing = self.vertices.get(vid)
        if existing is not None:
            if existing != p:
                raise ValueError(f"vertex {vid!r} already bound to {existing}")
            return vid
        self.vertices[vid] = p
        self.cells[vid] = Cell(CellKind.VERTEX, (vid,))
        return vid

    def add_edge(self, a: str, b: str, eid: Optional[str] = None) -> str:
        if a == b:
            raise DegenerateCell(f"edge endpoints must be distinct, got {a!r} twice")
        key = frozenset((a, b))
        found = self._edge_index.get(key)
        if found is not None:
            return found
        if eid is None:
            lo, hi = sorted((a, b))
            eid = f"{lo}--{hi}"
        if eid in self.cells:
            raise ValueError(f"cell id {eid!r} already in use")
        self.cells[eid] = Cell(CellKind.EDGE, (a, b))
        self._edge_index[key] = eid
        return eid

    def add_triangle(self, a: str, b: str, c: str, tid: Optional[str] = None) -> str:
        if len({a, b, c}) != 3:
            raise DegenerateCell("triangle needs three distinct vertices")
        pts = [self.vertices.get(v) for v in (a, b, c)]
        if all(p is not None for p in pts):
            if orientation(*pts) is Orientation.COLLINEAR:
                raise DegenerateCell(f"triangle {a},{b},{c} is collinear")
        if tid is None:
            tid = "--".join(sorted((a, b, c)))
        if tid in self.cells:
            raise ValueError(f"cell id {tid!r} already in use")
        for u, v in ((a, b), (b, c), (a, c)):
            self.add_edge(u, v)
        self.cells[tid] = Cell(CellKind.TRIANGLE, (a, b, c))
        return tid

    def edge_between(self, a: str, b: str) -> Optional[str]:
        return self._edge_index.get(frozenset((a, b)))

    def cell_points(self, cid: str) -> Optional[Tuple[Point2, ...]]:
        """Realization vertices of a cell, or None if a coordinate is missing."""
        cell = self.cells.get(cid)
        if cell is None:
            raise UnknownCellId(f"no cell {cid!r}")
        pts = []
        for vid in cell.vertex_ids:
            p = self.vertices.get(vid)
            if p is None:
                return None
            pts.append(p)
        return tuple(pts)


@dataclass(frozen=True)
class ValidityReport:
    name: str
    cell_count: int
    containment_violations: Tuple[str, ...]
    intersection_violations: Tuple[str, ...]

    @property
    def nonempty(self) -> bool:
        return self.cell_count > 0

    @property
    def valid(self) -> bool:
        return (
            self.nonempty
            and not self.containment_violations
            and not self.intersection_violations
        )

    def lines(self) -> List[str]:
        out = [f"complex={self.name or '<unnamed>'} cells={self.cell_count} valid={str(self.valid).lower()}"]
        for v in self.containment_violations:
            out.append(f"  containment: {v}")
        for v in self.intersection_violations:
            out.append(f"  intersection: {v}")
        if not self.nonempty:
            out.append("  empty: complex holds no cells")
        return out


def _bbox(pts: Sequence[Point2]):
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return (min(xs), min(ys), max(xs), max(ys))


def _bbox_overlap(b1, b2) -> bool:
    return not (b1[2] < b2[0] or b2[2] < b1[0] or b1[3] < b2[1] or b2[3] < b1[1])


def _ccw(pts: Sequence[Point2]) -> List[Point2]:
    pts = list(pts)
    if polygon_area2(pts) < 0:
        pts.reverse()
    return pts


def _point_in_convex(p: Point2, poly: Sequence[Point2]) -> bool:
    """Closed membership in a counterclockwise convex polygon."""
    n = len(poly)
    for i in range(n):
        if cross_value(poly[i], poly[(i + 1) % n], p) < 0:
            return False
    return True


def _line_hit(prev: Point2, cur: Point2, va: Fraction, vb: Fraction) -> Point2:
    """Point where segment prev-cur crosses the clip line (va, vb straddle 0)."""
    t = va / (va - vb)
    return Point2(prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y))


def convex_clip(subject: Sequence[Point2], clip: Sequence[Point2]) -> List[Point2]:
    """Sutherland-Hodgman clipping of convex ``subject`` by convex ``clip``."""
    output = list(subject)
    clip = list(clip)
    n = len(clip)
    for i in range(n):
        a, b = clip[i], clip[(i + 1) % n]
        if not output:
            break
        inputs = output
        output = []
        prev = inputs[-1]
        prev_side = cross_value(a, b, prev)
        for cur in inputs:
            cur_side = cross_value(a, b, cur)
            if cur_side >= 0:
                if prev_side < 0:
                    output.append(_line_hit(prev, cur, prev_side, cur_side))
                output.append(cur)
            elif prev_side >= 0:
                output.append(_line_hit(prev, cur, prev_side, cur_side))
            prev, prev_side = cur, cur_side
    dedup: List[Point2] = []
    for p in output:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def _classify_poly(points: List[Point2]):
    """Collapse a clip result to ('poly'|'seg'|'point'|None, payload)."""
    distinct: List[Point2] = []
    for p in points:
        if p not in distinct:
            distinct.append(p)
    if not distinct:
        return None
    if len(distinct) == 1:
        return ("point", distinct[0])
    if len(distinct) == 2 or polygon_area2(points) == 0:
        key = lambda q: (q.x, q.y)
        lo, hi = min(distinct, key=key), max(distinct, key=key)
        if lo == hi:
            return ("point", lo)
        return ("seg", lo, hi)
    return ("poly", points)


def _clip_segment_to_triangle(a: Point2, b: Point2, tri: Sequence[Point2]):
    """Intersection of closed segment ab with a CCW triangle, parametrically."""
    t0, t1 = Fraction(0), Fraction(1)
    n = len(tri)
    for i in range(n):
        e1, e2 = tri[i], tri[(i + 1) % n]
        va = cross_value(e1, e2, a)
        vb = cross_value(e1, e2, b)
        dv = vb - va
        if dv == 0:
            if va < 0:
                return None
            continue
        t_hit = -va / dv
        if dv > 0:
            if t_hit > t0:
                t0 = t_hit
        else:
            if t_hit < t1:
                t1 = t_hit
        if t0 > t1:
            return None
    def at(t: Fraction) -> Point2:
        return Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    p0, p1 = at(t0), at(t1)
    if p0 == p1:
        return ("point", p0)
    key = lambda q: (q.x, q.y)
    lo, hi = sorted((p0, p1), key=key)
    return ("seg", lo, hi)


def _realize(k: CellComplex, cid: str):
    pts = k.cell_points(cid)
    if pts is None:
        return None
    kind = k.cells[cid].kind
    if kind is CellKind.VERTEX:
        return ("point", pts[0])
    if kind is CellKind.EDGE:
        return ("seg", pts[0], pts[1])
    return ("tri", _ccw(pts))


def _pair_intersection(r1, r2):
    """Geometric intersection of two realized cells."""
    kinds = (r1[0], r2[0])
    if kinds == ("point", "point"):
        return ("point", r1[1]) if r1[1] == r2[1] else None
    if kinds == ("point", "seg"):
        return ("point", r1[1]) if on_segment(r1[1], r2[1], r2[2]) else None
    if kinds == ("seg", "point"):
        return _pair_intersection(r2, r1)
    if kinds == ("point", "tri"):
        return ("point", r1[1]) if _point_in_convex(r1[1], r2[1]) else None
    if kinds == ("tri", "point"):
        return _pair_intersection(r2, r1)
    if kinds == ("seg", "seg"):
        inter = segment_intersection(r1[1], r1[2], r2[1], r2[2])
        if inter is None:
            return None
        if inter[0] == "point":
            return inter
        return ("seg", inter[1], inter[2])
    if kinds == ("seg", "tri"):
        return _clip_segment_to_triangle(r1[1], r1[2], r2[1])
    if kinds == ("tri", "seg"):
        return _pair_intersection(r2, r1)
    clipped = convex_clip(r1[1], r2[1])
    return _classify_poly(clipped)


def _segment_param(p: Point2, a: Point2, b: Point2) -> Fraction:
    if b.x != a.x:
        return (p.x - a.x) / (b.x - a.x)
    return (p.y - a.y) / (b.y - a.y)


def _segment_covered_by_edges(k: CellComplex, lo: Point2, hi: Point2) -> bool:
    """True iff edge cells of ``k`` tile the whole closed segment lo-hi."""
    intervals = []
    for cid, cell in k.cells.items():
        if cell.kind is not CellKind.EDGE:
            continue
        pts = k.cell_points(cid)
        if pts is None:
            continue
        s, t = pts
        if on_segment(s, lo, hi) and on_segment(t, lo, hi):
            ps, pt = _segment_param(s, lo, hi), _segment_param(t, lo, hi)
            intervals.append((min(ps, pt), max(ps, pt)))
    intervals.sort()
    cursor = Fraction(0)
    for s, t in intervals:
        if s > cursor:
            return False
        if t > cursor:
            cursor = t
    return cursor >= 1


def _region_covered_by_triangles(k: CellComplex, poly: List[Point2]) -> bool:
    """True iff triangle cells with disjoint interiors tile the convex ``poly``."""
    target = abs(polygon_area2(poly))
    ccw_poly = _ccw(poly)
    contained = []
    for cid, cell in k.cells.items():
        if cell.kind is not CellKind.TRIANGLE:
            continue
        pts = k.cell_points(cid)
        if pts is None:
            continue
        if all(_point_in_convex(p, ccw_poly) for p in pts):
            contained.append(_ccw(pts))
    total = Fraction(0)
    for i, t1 in enumerate(contained):
        total += abs(polygon_area2(t1))
        for t2 in contained[i + 1 :]:
            overlap = convex_clip(t1, t2)
            if len(overlap) >= 3 and polygon_area2(overlap) != 0:
                return False
    return total == target


def validate_cw(k: CellComplex) -> ValidityReport:
    """Check the containment and intersection conditions; violations are data."""
    containment: List[str] = []
    for cid, cell in sorted(k.cells.items()):
        if cell.kind is CellKind.VERTEX:
            if cell.vertex_ids[0] not in k.vertices:
                containment.append(f"vertex cell {cid!r} has no coordinates")
        elif cell.kind is CellKind.EDGE:
            for vid in cell.vertex_ids:
                if vid not in k.vertices:
                    containment.append(f"edge {cid!r} is missing vertex {vid!r}")
        else:
            for vid in cell.vertex_ids:
                if vid not in k.vertices:
                    containment.append(f"triangle {cid!r} is missing vertex {vid!r}")
            a, b, c = cell.vertex_ids
            for u, v in ((a, b), (b, c), (a, c)):
                if k.edge_between(u, v) is None:
                    containment.append(f"triangle {cid!r} is missing edge {u!r}-{v!r}")

    intersection: List[str] = []
    realized = {}
    boxes = {}
    for cid in k.cells:
        r = _realize(k, cid)
        if r is not None:
            realized[cid] = r
            boxes[cid] = _bbox(r[1:]) if r[0] != "tri" else _bbox(r[1])
    vertex_coords = {(p.x, p.y) for p in k.vertices.values()}
    ids = sorted(realized)
    for i, c1 in enumerate(ids):
        r1, b1 = realized[c1], boxes[c1]
        for c2 in ids[i + 1 :]:
            r2, b2 = realized[c2], boxes[c2]
            if not _bbox_overlap(b1, b2):
                continue
            inter = _pair_intersection(r1, r2)
            if inter is None:
                continue
            if inter[0] == "point":
                p = inter[1]
                if (p.x, p.y) not in vertex_coords:
                    intersection.append(
                        f"cells {c1!r},{c2!r} meet at {p} which is not a vertex"
                    )
            elif inter[0] == "seg":
                if not _segment_covered_by_edges(k, inter[1], inter[2]):
                    intersection.append(
                        f"cells {c1!r},{c2!r} share segment {inter[1]}-{inter[2]} not covered by edges"
                    )
            else:
                if not _region_covered_by_triangles(k, inter[1]):
                    intersection.append(
                        f"cells {c1!r},{c2!r} share a region not covered by triangles"
                    )
    return ValidityReport(
        name=k.name,
        cell_count=len(k.cells),
        containment_violations=tuple(containment),
        intersection_violations=tuple(intersection),
    )


def _faces_of(k: CellComplex, cid: str) -> List[str]:
    cell = k.cells[cid]
    faces: List[str] = []
    if cell.kind is CellKind.EDGE:
        for vid in cell.vertex_ids:
            if vid in k.cells:
                faces.append(vid)
    elif cell.kind is CellKind.TRIANGLE:
        a, b, c = cell.vertex_ids
        for vid in (a, b, c):
            if vid in k.cells:
                faces.append(vid)
        for u, v in ((a, b), (b, c), (a, c)):
            eid = k.edge_between(u, v)
            if eid is not None:
                faces.append(eid)
    return faces


def closure(k: CellComplex, cell_ids: Iterable[str]) -> FrozenSet[str]:
    """The given cells plus all of their faces present in the complex."""
    result = set()
    for cid in cell_ids:
        if cid not in k.cells:
            raise UnknownCellId(f"no cell {cid!r}")
        result.add(cid)
        result.update(_faces_of(k, cid))
    return frozenset(result)


def boundary(k: CellComplex, cell_ids: Iterable[str]) -> FrozenSet[str]:
    """Combinatorial frontier of the closure of the given cells.

    An edge is a frontier edge when exactly one triangle of the closure is
    incident to it; a vertex is on the frontier when it bounds a frontier
    edge or a maximal (triangle-free) edge.  Maximal cells themselves keep
    their relative interior, so a lone edge has only its endpoints as
    boundary and an isolated vertex has none.
    """
    closed = closure(k, cell_ids)
    tri_count: Dict[str, int] = {}
    for cid in closed:
        cell = k.cells[cid]
        if cell.kind is CellKind.TRIANGLE:
            a, b, c = cell.vertex_ids
            for u, v in ((a, b), (b, c), (a, c)):
                eid = k.edge_between(u, v)
                if eid is not None:
                    tri_count[eid] = tri_count.get(eid, 0) + 1
    result = set()
    for cid in closed:
        cell = k.cells[cid]
        if cell.kind is not CellKind.EDGE:
            continue
        incident = tri_count.get(cid, 0)
        if incident == 1:
            result.add(cid)
        if incident <= 1:
            for vid in cell.vertex_ids:
                if vid in closed:
                    result.add(vid)
    return frozenset(result)


def interior(k: CellComplex, cell_ids: Iterable[str]) -> FrozenSet[str]:
    """Closure minus boundary."""
    return closure(k, cell_ids) - boundary(k, cell_ids)
