"""Combinatorial shape counters for ribbons, complexes and nerves.

These are explicit-object counts, not homology ranks: the zeroth counter
counts filaments, the first counts cycle loops, the second counts hole
markers.  A bare ribbon therefore has a cycle count of 2 even though its
annulus has first homology rank 1; see :mod:`ribbonkit.homology` for the
rank-based oracle, which is never conflated with these counters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Union

from .errors import TooFewCycles, UnsupportedEntityKind
from .ribbons import (
    FilledCycle,
    Ribbon,
    RibbonComplex,
    RibbonNerve,
    VortexNerve,
    ribbon_nerves_of_vortex_nerve,
    ribbons_of_vortex_nerve,
)

Countable = Union[Ribbon, RibbonComplex, RibbonNerve, VortexNerve]


@dataclass(frozen=True)
class BettiTriple:
    b0: int  # filaments
    b1: int  # cycle loops
    b2: int  # hole markers


@dataclass(frozen=True)
class RibbonComplexBetti:
    count_variant: int  # number of ribbons
    sum_variant: int    # sum of per-ribbon counters


def _member_ribbons(s: Countable) -> List[Ribbon]:
    if isinstance(s, Ribbon):
        return [s]
    if isinstance(s, (RibbonComplex, RibbonNerve)):
        return list(s.ribbons)
    if isinstance(s, VortexNerve):
        return []
    raise UnsupportedEntityKind(f"no counters for {type(s).__name__}")


def _distinct_cycles(s: Countable) -> List[FilledCycle]:
    seen = {}
    if isinstance(s, VortexNerve):
        cycles = list(s.cycles)
    else:
        cycles = []
        for r in _member_ribbons(s):
            cycles.extend((r.outer, r.inner))
    for c in cycles:
        seen[id(c)] = c
    return list(seen.values())


def betti_triple(s: Countable) -> BettiTriple:
    """(filament count, cycle count, hole count) for any shape structure."""
    if isinstance(s, VortexNerve):
        return BettiTriple(b0=len(s.filaments), b1=len(s.cycles), b2=0)
    ribbons = _member_ribbons(s)
    return BettiTriple(
        b0=sum(len(r.filaments) for r in ribbons),
        b1=len(_distinct_cycles(s)),
        b2=sum(len(r.holes) for r in ribbons),
    )


def betti_rb(r: Ribbon) -> int:
    """Filaments + holes + the ribbon's two cycles."""
    if not isinstance(r, Ribbon):
        raise UnsupportedEntityKind("betti_rb is defined on ribbons")
    t = betti_triple(r)
    return t.b0 + t.b2 + 2


def betti_rbx(x: RibbonComplex) -> RibbonComplexBetti:
    """Both conventions for the ribbon-complex counter.

    The count convention counts ribbons; the summation convention adds
    the per-ribbon counters.  The two disagree in general, so both are
    returned and callers choose.
    """
    if not isinstance(x, RibbonComplex):
        raise UnsupportedEntityKind("betti_rbx is defined on ribbon complexes")
    return RibbonComplexBetti(
        count_variant=len(x.ribbons),
        sum_variant=sum(betti_rb(r) for r in x.ribbons),
    )


def betti_rbnrv(n: RibbonNerve) -> int:
    """Filaments + overlapping-ribbon count + holes for a ribbon nerve."""
    if not isinstance(n, RibbonNerve):
        raise UnsupportedEntityKind("betti_rbnrv is defined on ribbon nerves")
    t = betti_triple(n)
    return t.b0 + len(n.ribbons) + t.b2


def betti_rb_vnrv(v: VortexNerve) -> int:
    """Sum of ribbon counters over the nerve's k-1 ribbons."""
    if len(v.cycles) < 2:
        raise TooFewCycles("vortex nerve ribbon counter needs k >= 2")
    return sum(betti_rb(r) for r in ribbons_of_vortex_nerve(v))


def betti_rbnrv_vnrv(v: VortexNerve) -> int:
    """Sum of ribbon-nerve counters over the nerve's k-2 ribbon nerves."""
    if len(v.cycles) < 3:
        raise TooFewCycles("vortex nerve ribbon-nerve counter needs k >= 3")
    return sum(betti_rbnrv(n) for n in ribbon_nerves_of_vortex_nerve(v))
