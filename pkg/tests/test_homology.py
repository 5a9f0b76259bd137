from fractions import Fraction
from random import Random

import pytest

from helpers import random_rect_family

from ribbonkit.division import Frame
from ribbonkit.errors import (
    CollectionTooLarge,
    EmptyCollection,
    FrameTooSmall,
    NonConvexRegion,
    NotDownwardClosed,
)
from ribbonkit.geometry import point
from ribbonkit.homology import (
    _gf2_rank,
    boundary_matrix,
    cubical_betti,
    is_convex_loop,
    min_boundary_clearance_sq,
    nerve_theorem_check,
    rasterize,
    z2_betti,
)
from ribbonkit.nerves import Region, SimplicialComplex, nerve


def _sc(labels, simplex_sets):
    return SimplicialComplex(
        vertex_labels=tuple(labels),
        simplices=frozenset(frozenset(s) for s in simplex_sets),
    )


def test_z2_betti_single_vertex():
    assert z2_betti(_sc("a", [{0}])) == (1, 0)


def test_z2_betti_hollow_triangle():
    sc = _sc("abc", [{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}])
    assert z2_betti(sc) == (1, 1)


def test_z2_betti_full_triangle_with_hand_ranks():
    sc = _sc("abc", [{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}, {0, 1, 2}])
    # by hand: rank d1 = 2 on three edges, rank d2 = 1, so b1 = 3 - 2 - 1 = 0
    assert _gf2_rank(boundary_matrix(sc, 1).columns) == 2
    assert _gf2_rank(boundary_matrix(sc, 2).columns) == 1
    assert z2_betti(sc) == (1, 0)


def test_z2_betti_two_components():
    sc = _sc("abcd", [{0}, {1}, {2}, {3}, {0, 1}, {2, 3}])
    assert z2_betti(sc) == (2, 0)


def test_z2_betti_rejects_open_complex():
    with pytest.raises(NotDownwardClosed):
        z2_betti(_sc("ab", [{0, 1}]))


def test_z2_betti_of_cone_is_trivial():
    rng = Random(3)
    for _ in range(15):
        n = rng.randint(2, 5)
        simplices = {frozenset({i}) for i in range(n)}
        for _ in range(rng.randint(1, 6)):
            i, j = rng.sample(range(n), 2)
            simplices.add(frozenset({i, j}))
        apex = n
        coned = set(simplices) | {frozenset({apex})}
        for s in simplices:
            if len(s) <= 2:
                coned.add(s | {apex})
        sc = SimplicialComplex(
            vertex_labels=tuple(f"v{i}" for i in range(n + 1)),
            simplices=frozenset(coned),
        )
        assert z2_betti(sc) == (1, 0)


def _rect_region(x0, y0, x1, y1, label=""):
    pts = (point(x0, y0), point(x1, y0), point(x1, y1), point(x0, y1))
    return Region(loops=(pts,), label=label)


def _frame(x0, y0, x1, y1):
    return Frame(point(x0, y0), point(x1, y1))


def test_rasterize_solid_block():
    frame = _frame(0, 0, 4, 4)
    bmp = rasterize([_rect_region(1, 1, 3, 3)], frame, 4)
    assert bmp.width == 16 and bmp.height == 16
    # oracle: integer comparison per pixel center (2i+1)/8 in [1, 3]
    expected = {
        (i, j)
        for i in range(16)
        for j in range(16)
        if 8 <= 2 * i + 1 <= 24 and 8 <= 2 * j + 1 <= 24
    }
    assert bmp.bits == expected
    assert cubical_betti(bmp) == (1, 0)


def test_rasterize_empty_list():
    bmp = rasterize([], _frame(0, 0, 2, 2), 4)
    assert bmp.bits == set()
    assert cubical_betti(bmp) == (0, 0)


def test_rasterize_annulus_ring():
    outer = (point(0, 0), point(4, 0), point(4, 4), point(0, 4))
    inner = (point(1, 1), point(3, 1), point(3, 3), point(1, 3))
    ring = Region(loops=(outer,), excluded=(inner,), label="ring")
    frame = _frame(-1, -1, 5, 5)
    bmp = rasterize([ring], frame, 16)
    # membership oracle per pixel center, written with plain comparisons
    for (i, j) in [(0, 0), (40, 40), (50, 50), (90, 90)]:
        c = bmp.pixel_center(i, j)
        in_outer = 0 <= c.x <= 4 and 0 <= c.y <= 4
        in_inner_open = 1 < c.x < 3 and 1 < c.y < 3
        assert ((i, j) in bmp.bits) == (in_outer and not in_inner_open)
    assert cubical_betti(bmp) == (1, 1)


def test_rasterize_guard_rails():
    with pytest.raises(ValueError):
        rasterize([_rect_region(0, 0, 1, 1)], _frame(0, 0, 2, 2), 2)
    with pytest.raises(FrameTooSmall):
        rasterize([_rect_region(0, 0, 9, 9)], _frame(0, 0, 2, 2), 4)


def test_cubical_betti_two_blocks():
    frame = _frame(0, 0, 8, 2)
    bmp = rasterize([_rect_region(1, 0, 3, 2), _rect_region(5, 0, 7, 2)], frame, 4)
    assert cubical_betti(bmp) == (2, 0)


def test_is_convex_loop():
    assert is_convex_loop([point(0, 0), point(2, 0), point(2, 2), point(0, 2)])
    assert is_convex_loop([point(0, 0), point(1, 0), point(2, 0), point(2, 2), point(0, 2)])
    dent = [point(0, 0), point(4, 0), point(4, 2), point(2, 1), point(0, 2)]
    assert not is_convex_loop(dent)


def test_nerve_check_common_point():
    regions = [
        _rect_region(0, 0, 2, 2, "a"),
        _rect_region(1, 0, 3, 2, "b"),
        _rect_region(0, 1, 3, 2, "c"),
    ]
    report = nerve_theorem_check(regions, _frame(-1, -1, 4, 3), 16)
    assert report.nerve_betti == (1, 0)
    assert report.union_betti == (1, 0)
    assert report.passed


def test_nerve_check_disjoint_pair():
    regions = [_rect_region(0, 0, 1, 1, "a"), _rect_region(3, 0, 4, 1, "b")]
    report = nerve_theorem_check(regions, _frame(-1, -1, 5, 2), 16)
    assert report.nerve_betti == (2, 0)
    assert report.union_betti == (2, 0)
    assert report.passed


def test_nerve_check_pairwise_but_no_triple():
    # three convex bars rim a triangular hole: every pair meets, the
    # triple intersection is empty
    bars = [
        Region(loops=((point(0, 0), point(8, 0), point(8, 1), point(0, 1)),), label="bottom"),
        Region(loops=((point(0, 0), point(1, 0), point(1, 8), point(0, 8)),), label="side"),
        Region(loops=((point(8, 0), point(0, 8), point(0, 6), point(6, 0)),), label="cross"),
    ]
    sc = nerve(bars)
    assert frozenset({0, 1, 2}) not in sc.simplices
    assert all(frozenset(p) in sc.simplices for p in ((0, 1), (1, 2), (0, 2)))
    report = nerve_theorem_check(bars, _frame(-1, -1, 9, 9), 16)
    assert report.nerve_betti == (1, 1)
    assert report.union_betti == (1, 1)
    assert report.passed


def test_nerve_check_rejects_nonconvex_and_oversize():
    dent = Region(
        loops=((point(0, 0), point(4, 0), point(4, 2), point(2, 1), point(0, 2)),),
        label="dent",
    )
    with pytest.raises(NonConvexRegion):
        nerve_theorem_check([dent], _frame(-1, -1, 5, 3), 16)
    with pytest.raises(EmptyCollection):
        nerve_theorem_check([], _frame(0, 0, 1, 1), 16)
    many = [_rect_region(3 * i, 0, 3 * i + 2, 2, f"r{i}") for i in range(21)]
    with pytest.raises(CollectionTooLarge):
        nerve_theorem_check(many, _frame(-1, -1, 80, 3), 16)


def test_random_families_nerve_agreement():
    rng = Random(51)
    frame = _frame("-1/2", "-1/2", "35/4", "35/4")
    for _ in range(12):
        regions = random_rect_family(rng)
        report = nerve_theorem_check(regions, frame, 16)
        assert report.passed


def test_resolution_stability_for_clear_families():
    rng = Random(53)
    frame = _frame("-1/2", "-1/2", "35/4", "35/4")
    checked = 0
    while checked < 6:
        regions = random_rect_family(rng)
        clearance = min_boundary_clearance_sq(regions)
        if clearance is not None and clearance <= Fraction(1, 64):  # 2 px at res 16
            continue
        b16 = nerve_theorem_check(regions, frame, 16)
        b32 = nerve_theorem_check(regions, frame, 32)
        assert b16.union_betti == b32.union_betti
        checked += 1
