from random import Random

import pytest

from helpers import random_rect_ribbon, translate_ribbon

from ribbonkit import gallery
from ribbonkit.betti import (
    betti_rb,
    betti_rb_vnrv,
    betti_rbnrv,
    betti_rbnrv_vnrv,
    betti_rbx,
    betti_triple,
)
from ribbonkit.complexes import CellComplex
from ribbonkit.errors import TooFewCycles, UnsupportedEntityKind
from ribbonkit.nerves import ribbon_nerve
from ribbonkit.ribbons import RibbonComplex, RibbonNerve


def test_filament_ribbon_decomposition():
    r = gallery.filament_ribbon().ribbon
    t = betti_triple(r)
    assert (t.b0, t.b1, t.b2) == (1, 2, 3)
    assert betti_rb(r) == 6  # 1 + 2 + 3


def test_hole_counts_across_gallery():
    th = gallery.two_hole_ribbon()
    assert betti_triple(th.ribbon).b2 == 2
    sv = gallery.shared_vertex_pair()
    assert betti_triple(sv.lower).b2 == 2
    assert betti_triple(sv.upper).b2 == 3
    nerve_groups = ribbon_nerve(sv.rbx)
    assert len(nerve_groups) == 1
    assert betti_triple(nerve_groups[0]).b2 == 5


def test_betti_rb_examples():
    rng = Random(1)
    bare = random_rect_ribbon(rng, max_holes=0, max_filaments=0)
    assert betti_rb(bare) == 2
    r = random_rect_ribbon(rng, max_holes=1, max_filaments=2)
    t = betti_triple(r)
    assert betti_rb(r) == t.b0 + t.b2 + 2


def test_betti_rbx_variants():
    fv = gallery.five_ribbon_complex()
    both = betti_rbx(fv.rbx)
    assert both.count_variant == 5
    assert both.sum_variant == sum(betti_rb(r) for r in fv.rbx.ribbons)
    rng = Random(2)
    solo = RibbonComplex((random_rect_ribbon(rng, max_holes=0, max_filaments=0),))
    got = betti_rbx(solo)
    assert (got.count_variant, got.sum_variant) == (1, 2)
    pair = RibbonComplex(
        (
            random_rect_ribbon(rng, max_holes=0, max_filaments=0),
            random_rect_ribbon(rng, max_holes=0, max_filaments=0),
        )
    )
    got = betti_rbx(pair)
    assert (got.count_variant, got.sum_variant) == (2, 4)


def test_betti_rbnrv_cases():
    sv = gallery.shared_vertex_pair()
    rng = Random(3)
    bare_a = random_rect_ribbon(rng, max_holes=0, max_filaments=0)
    bare_b = random_rect_ribbon(rng, max_holes=0, max_filaments=0)
    assert betti_rbnrv(RibbonNerve((bare_a, bare_b))) == 2
    r = gallery.two_hole_ribbon().ribbon
    nerve_of_one = RibbonNerve((r,))
    assert betti_rbnrv(nerve_of_one) == 0 + 1 + 2
    # six markers over three ribbons: counter follows the summation reading
    left = gallery.nerve_space_pair().left
    groups = ribbon_nerve(left.rbx)
    assert len(groups) == 1
    assert betti_rbnrv(groups[0]) == 0 + 3 + 6 == 9


def test_vortex_nerve_counters():
    tv = gallery.triple_vortex()
    assert betti_rb_vnrv(tv.nerve) == 4  # two bare ribbons
    assert betti_rbnrv_vnrv(tv.nerve) == 2  # one nerve of two bare ribbons
    k = CellComplex("K")
    from helpers import add_rect_loop
    from ribbonkit.ribbons import VortexNerve, make_filled_cycle

    inner = make_filled_cycle(k, add_rect_loop(k, "i", 1, 1, 3, 3), "inner")
    outer = make_filled_cycle(k, add_rect_loop(k, "o", 0, 0, 4, 4), "outer")
    two = VortexNerve(cycles=(inner, outer))
    assert betti_rb_vnrv(two) == 2
    with pytest.raises(TooFewCycles):
        betti_rbnrv_vnrv(two)


def test_formula_consistency_on_random_ribbons():
    rng = Random(17)
    for _ in range(60):
        r = random_rect_ribbon(rng)
        t = betti_triple(r)
        assert betti_rb(r) == t.b0 + t.b2 + 2
    for _ in range(20):
        members = tuple(random_rect_ribbon(rng) for _ in range(rng.randint(1, 8)))
        x = RibbonComplex(members)
        assert betti_rbx(x).sum_variant == sum(betti_rb(r) for r in members)


def test_counters_translation_invariant():
    rng = Random(23)
    for _ in range(10):
        r = random_rect_ribbon(rng)
        moved = translate_ribbon(r, -11, 4)
        assert betti_triple(r) == betti_triple(moved)
        assert betti_rb(r) == betti_rb(moved)


def test_bare_nesting_chain_counter():
    from helpers import add_rect_loop
    from ribbonkit.ribbons import VortexNerve, make_filled_cycle

    rng = Random(29)
    for _ in range(10):
        depth = rng.randint(2, 6)
        k = CellComplex("chain")
        cycles = []
        for i in range(depth):
            pad = (depth - 1 - i) * 2
            ids = add_rect_loop(k, f"c{i}", pad, pad, 24 - pad, 24 - pad)
            cycles.append(make_filled_cycle(k, ids, f"c{i}"))
        nerve = VortexNerve(cycles=tuple(cycles))
        assert betti_rb_vnrv(nerve) == 2 * (depth - 1)


def test_unsupported_entity():
    with pytest.raises(UnsupportedEntityKind):
        betti_triple("not a shape")
