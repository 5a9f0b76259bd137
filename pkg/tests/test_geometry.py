from fractions import Fraction
from random import Random

import pytest

from ribbonkit.errors import NonSimplePolygon, TooFewVertices
from ribbonkit.geometry import (
    Orientation,
    Point2,
    PointLocation,
    cross_value,
    loop_segments,
    on_segment,
    orientation,
    point,
    point_in_polygon,
    segment_intersection,
    segment_point_distance_sq,
    segment_segment_distance_sq,
    simple_polygon,
    to_fraction,
)

SQUARE = [point(0, 0), point(3, 0), point(3, 3), point(0, 3)]
BOWTIE = [point(0, 0), point(2, 2), point(2, 0), point(0, 2)]


def test_to_fraction_accepts_exact_forms():
    assert to_fraction(3) == Fraction(3)
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(0.25) == Fraction(1, 4)
    assert to_fraction(Fraction(7, 2)) == Fraction(7, 2)


def test_to_fraction_rejects_inexact_float():
    with pytest.raises(ValueError):
        to_fraction(0.1)
    with pytest.raises(TypeError):
        to_fraction(object())


def test_orientation_examples():
    assert orientation(point(0, 0), point(1, 0), point(0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orientation(point(0, 0), point(1, 1), point(2, 2)) is Orientation.COLLINEAR
    # mirror case; by hand (b-a) x (c-a) = (0,1) x (1,0) = -1 < 0
    assert orientation(point(0, 0), point(0, 1), point(1, 0)) is Orientation.CLOCKWISE


def test_orientation_antisymmetric_under_swaps():
    rng = Random(7)
    flip = {
        Orientation.CLOCKWISE: Orientation.COUNTERCLOCKWISE,
        Orientation.COUNTERCLOCKWISE: Orientation.CLOCKWISE,
        Orientation.COLLINEAR: Orientation.COLLINEAR,
    }
    for _ in range(200):
        a, b, c = (point(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(3))
        base = orientation(a, b, c)
        assert orientation(b, a, c) is flip[base]
        assert orientation(a, c, b) is flip[base]
        assert orientation(c, b, a) is flip[base]


def test_point_in_polygon_examples():
    assert point_in_polygon(point(1, 1), SQUARE) is PointLocation.INSIDE
    assert point_in_polygon(point(0, 0), SQUARE) is PointLocation.ON_BOUNDARY
    assert point_in_polygon(point(5, 5), SQUARE) is PointLocation.OUTSIDE


def test_point_in_polygon_requires_simple_loop():
    with pytest.raises(NonSimplePolygon):
        point_in_polygon(point(1, 1), BOWTIE)


def _ray_classify(p, loop):
    """Independent classifier: parity of proper crossings of a generic ray."""
    for a, b in loop_segments(loop):
        if on_segment(p, a, b):
            return PointLocation.ON_BOUNDARY
    far_x = max(q.x for q in loop) + 1
    for j in range(1, 200):
        far = Point2(far_x + j, p.y + Fraction(j, 7))
        if any(cross_value(p, far, v) == 0 for v in loop):
            continue  # ray hits a vertex; pick another
        crossings = 0
        for a, b in loop_segments(loop):
            inter = segment_intersection(p, far, a, b)
            if inter is not None:
                assert inter[0] == "point"
                crossings += 1
        return PointLocation.INSIDE if crossings % 2 else PointLocation.OUTSIDE
    raise AssertionError("no generic ray found")


def test_point_in_polygon_matches_ray_oracle():
    rng = Random(11)
    loops = [
        SQUARE,
        [point(0, 0), point(4, 0), point(4, 2), point(2, 1), point(0, 2)],  # dented
        [point(-2, -1), point(3, -2), point(5, 4), point(0, 5), point(-3, 2)],
    ]
    for loop in loops:
        for _ in range(150):
            p = Point2(Fraction(rng.randint(-12, 12), 2), Fraction(rng.randint(-12, 12), 2))
            assert point_in_polygon(p, loop) is _ray_classify(p, loop)


def _brute_simple(loop):
    """All-pairs exact segment intersection oracle for simplicity."""
    if len({(p.x, p.y) for p in loop}) != len(loop):
        return False
    segs = loop_segments(loop)
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            inter = segment_intersection(*segs[i], *segs[j])
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                shared = segs[i][1] if j == i + 1 else segs[i][0]
                if inter != ("point", shared):
                    return False
            elif inter is not None:
                return False
    return True


def test_simple_polygon_examples_and_oracle():
    square = [point(0, 0), point(2, 0), point(2, 2), point(0, 2)]
    assert simple_polygon(square) is True
    assert simple_polygon(BOWTIE) is False
    with pytest.raises(TooFewVertices):
        simple_polygon([point(0, 0), point(1, 0)])
    spike = [point(0, 0), point(4, 0), point(2, 0), point(2, 2)]
    cases = [square, BOWTIE, spike, SQUARE,
             [point(0, 0), point(1, 0), point(1, 1), point(0, 1), point(0, 0)][:-1]]
    for loop in cases:
        assert simple_polygon(loop) == _brute_simple(loop)


def test_simple_polygon_allows_collinear_straight_runs():
    loop = [point(0, 0), point(2, 0), point(4, 0), point(4, 2), point(0, 2)]
    assert simple_polygon(loop) is True


def test_segment_intersection_cases():
    # proper crossing
    inter = segment_intersection(point(0, 0), point(2, 2), point(0, 2), point(2, 0))
    assert inter == ("point", point(1, 1))
    # endpoint touch
    inter = segment_intersection(point(0, 0), point(1, 1), point(1, 1), point(3, 0))
    assert inter == ("point", point(1, 1))
    # collinear overlap
    inter = segment_intersection(point(0, 0), point(4, 0), point(2, 0), point(6, 0))
    assert inter == ("segment", point(2, 0), point(4, 0))
    # parallel, apart
    assert segment_intersection(point(0, 0), point(4, 0), point(0, 1), point(4, 1)) is None
    # skew, apart
    assert segment_intersection(point(0, 0), point(1, 0), point(3, 1), point(3, 5)) is None
    # degenerate segment on and off the other carrier
    assert segment_intersection(point(1, 0), point(1, 0), point(0, 0), point(4, 0)) == (
        "point",
        point(1, 0),
    )
    assert segment_intersection(point(1, 2), point(1, 2), point(0, 0), point(4, 0)) is None


def test_segment_distances():
    assert segment_point_distance_sq(point(0, 1), point(-2, 0), point(2, 0)) == 1
    assert segment_point_distance_sq(point(4, 0), point(-2, 0), point(2, 0)) == 4
    assert segment_segment_distance_sq(point(0, 0), point(1, 0), point(0, 2), point(1, 2)) == 4
    assert segment_segment_distance_sq(point(0, 0), point(2, 2), point(0, 2), point(2, 0)) == 0
