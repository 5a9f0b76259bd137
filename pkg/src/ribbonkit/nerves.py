"""Nerve construction over finite collections of closed planar regions.

The nerve of a collection is the abstract simplicial complex of all
nonempty subcollections whose members share a common point.  Witness
points are searched over an exact candidate set: every boundary vertex,
every pairwise boundary crossing, and one interior sample per loop, which
is complete for piecewise-linear closed regions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .errors import CollectionTooLarge, EmptyCollection, NonSimplePolygon
from .geometry import (
    Point2,
    PointLocation,
    ScaledLoop,
    loop_segments,
    segment_intersection,
    simple_polygon,
    vertex_centroid,
)
from .ribbons import FilledCycle, Ribbon, RibbonComplex, RibbonNerve


@dataclass(eq=False)
class Region:
    """Closed point set given by outer loops minus excluded open interiors."""

    loops: Tuple[Tuple[Point2, ...], ...]
    excluded: Tuple[Tuple[Point2, ...], ...] = ()
    label: str = ""

    def __post_init__(self):
        self.loops = tuple(tuple(l) for l in self.loops)
        self.excluded = tuple(tuple(l) for l in self.excluded)
        if not self.loops:
            raise EmptyCollection("a region needs at least one loop")
        self._scaled = [ScaledLoop(l) for l in self.loops]
        self._scaled_excluded = [ScaledLoop(l) for l in self.excluded]
        xs = [p.x for loop in self.loops for p in loop]
        ys = [p.y for loop in self.loops for p in loop]
        self.bbox = (min(xs), min(ys), max(xs), max(ys))

    @classmethod
    def from_cycle(cls, c: FilledCycle, label: str = "") -> "Region":
        return cls(loops=(c.points,), label=label or c.label)

    @classmethod
    def from_ribbon(cls, r: Ribbon, label: str = "") -> "Region":
        return cls(
            loops=(r.outer.points,),
            excluded=(r.inner.points,),
            label=label or r.label,
        )

    @classmethod
    def from_polygon(cls, pts: Sequence[Point2], label: str = "") -> "Region":
        pts = tuple(pts)
        if not simple_polygon(pts):
            raise NonSimplePolygon("polygon region must be simple")
        return cls(loops=(pts,), label=label)

    def contains(self, p: Point2) -> bool:
        b = self.bbox
        if p.x < b[0] or p.x > b[2] or p.y < b[1] or p.y > b[3]:
            return False
        if not any(s.classify(p) is not PointLocation.OUTSIDE for s in self._scaled):
            return False
        return all(
            s.classify(p) is not PointLocation.INSIDE for s in self._scaled_excluded
        )

    def boundary_vertices(self) -> List[Point2]:
        out: List[Point2] = []
        for loop in self.loops + self.excluded:
            out.extend(loop)
        return out

    def boundary_segments(self):
        segs = []
        for loop in self.loops + self.excluded:
            segs.extend(loop_segments(loop))
        return segs

    def interior_samples(self) -> List[Point2]:
        return [vertex_centroid(loop) for loop in self.loops]

    def __repr__(self) -> str:
        return f"Region({self.label or len(self.loops)})"


def _candidate_points(regions: Sequence[Region]) -> List[Point2]:
    seen = set()
    out: List[Point2] = []

    def push(p: Point2):
        key = (p.x, p.y)
        if key not in seen:
            seen.add(key)
            out.append(p)

    for r in regions:
        for p in r.boundary_vertices():
            push(p)
    for i, r1 in enumerate(regions):
        segs1 = r1.boundary_segments()
        for r2 in regions[i + 1 :]:
            for a, b in segs1:
                for c, d in r2.boundary_segments():
                    inter = segment_intersection(a, b, c, d)
                    if inter is None:
                        continue
                    if inter[0] == "point":
                        push(inter[1])
                    else:
                        push(inter[1])
                        push(inter[2])
    for r in regions:
        for p in r.interior_samples():
            push(p)
    return out


def common_witness(regions: Sequence[Region]) -> Optional[Point2]:
    """A point in the common intersection of all regions, if one exists."""
    if not regions:
        raise EmptyCollection("witness search over an empty collection")
    for p in _candidate_points(regions):
        if all(r.contains(p) for r in regions):
            return p
    return None


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex on labelled vertices."""

    vertex_labels: Tuple[str, ...]
    simplices: FrozenSet[FrozenSet[int]]

    def is_downward_closed(self) -> bool:
        for s in self.simplices:
            if len(s) > 1:
                for facet in combinations(sorted(s), len(s) - 1):
                    if frozenset(facet) not in self.simplices:
                        return False
        return True

    def maximal_simplices(self) -> Tuple[Tuple[int, ...], ...]:
        maximal = [
            s
            for s in self.simplices
            if not any(s < t for t in self.simplices)
        ]
        return tuple(sorted(tuple(sorted(s)) for s in maximal))

    def simplices_of_dim(self, d: int) -> Tuple[FrozenSet[int], ...]:
        return tuple(
            sorted((s for s in self.simplices if len(s) == d + 1), key=sorted)
        )

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)


def nerve(regions: Sequence[Region]) -> SimplicialComplex:
    """All nonempty subcollections with a common point, downward closed."""
    if not regions:
        raise EmptyCollection("nerve of an empty collection")
    if len(regions) > 20:
        raise CollectionTooLarge(f"nerve enumeration capped at 20 regions, got {len(regions)}")
    n = len(regions)
    simplices = {frozenset((i,)) for i in range(n)}
    level = [frozenset((i,)) for i in range(n)]
    while level:
        next_level = []
        seen = set()
        for s in level:
            for j in range(max(s) + 1, n):
                cand = s | {j}
                if cand in seen:
                    continue
                seen.add(cand)
                if any(
                    frozenset(f) not in simplices
                    for f in combinations(sorted(cand), len(cand) - 1)
                ):
                    continue
                if common_witness([regions[i] for i in sorted(cand)]) is not None:
                    simplices.add(cand)
                    next_level.append(cand)
        level = next_level
    return SimplicialComplex(
        vertex_labels=tuple(r.label for r in regions),
        simplices=frozenset(simplices),
    )


def ribbon_nerve(rbx: RibbonComplex) -> Tuple[RibbonNerve, ...]:
    """Maximal groups of ribbons with common intersection; singletons allowed."""
    regions = [Region.from_ribbon(r) for r in rbx.ribbons]
    sc = nerve(regions)
    groups = sc.maximal_simplices()
    out = []
    for g in groups:
        members = tuple(rbx.ribbons[i] for i in g)
        out.append(
            RibbonNerve(members, label="+".join(m.label or f"r{i}" for i, m in zip(g, members)))
        )
    return tuple(out)
