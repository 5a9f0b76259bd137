"""Probe functions and approximate descriptive nearness.

Entities are described by feature vectors of exact rationals; two
entities are near when the Euclidean distance between their vectors is
strictly below a positive threshold.  The comparison squares both sides,
so it stays in rational arithmetic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, Union

from .betti import betti_rb, betti_triple
from .errors import EmptyCollection, UnsupportedEntityKind
from .fixedpoint import declared_fixed_vertex, gradient_angle
from .geometry import to_fraction
from .ribbons import Ribbon, RibbonComplex, RibbonNerve, VortexNerve


class _EmptySet:
    """Marker for the empty entity, far from everything."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _EmptySet()


def _is_empty(x) -> bool:
    if x is EMPTY:
        return True
    return isinstance(x, (tuple, list, set, frozenset)) and len(x) == 0


@dataclass(frozen=True)
class Probe:
    """Named total evaluator from an entity to a rational feature."""

    name: str
    evaluator: Callable[[object], Fraction]

    def __call__(self, entity) -> Fraction:
        return self.evaluator(entity)


@dataclass(frozen=True)
class ProbeVector:
    names: Tuple[str, ...]
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ValueError("probe names and values must align")


@dataclass(frozen=True)
class Threshold:
    value: Fraction

    def __post_init__(self):
        if self.value <= 0:
            raise ValueError(f"threshold must be positive, got {self.value}")


def as_threshold(th: Union[Threshold, int, str, Fraction]) -> Threshold:
    if isinstance(th, Threshold):
        return th
    return Threshold(to_fraction(th))


def _probe_b0(entity) -> Fraction:
    return Fraction(betti_triple(entity).b0)


def _probe_b1(entity) -> Fraction:
    return Fraction(betti_triple(entity).b1)


def _probe_b2(entity) -> Fraction:
    return Fraction(betti_triple(entity).b2)


def _probe_betti_rb(entity) -> Fraction:
    if not isinstance(entity, Ribbon):
        raise UnsupportedEntityKind("betti_rb probe needs a ribbon")
    return Fraction(betti_rb(entity))


def _probe_ribbon_count(entity) -> Fraction:
    if isinstance(entity, Ribbon):
        return Fraction(1)
    if isinstance(entity, (RibbonComplex, RibbonNerve)):
        return Fraction(len(entity.ribbons))
    if isinstance(entity, VortexNerve):
        return Fraction(len(entity.cycles) - 1)
    raise UnsupportedEntityKind(f"no ribbon count for {type(entity).__name__}")


def _probe_gradient_angle(entity) -> Fraction:
    if not isinstance(entity, Ribbon):
        raise UnsupportedEntityKind("gradient angle probe needs a ribbon")
    vid = declared_fixed_vertex(entity)
    if vid is None:
        raise UnsupportedEntityKind("ribbon declares no fixed point for the gradient probe")
    return gradient_angle(entity, vid)


def _probe_vertex_count(entity) -> Fraction:
    if isinstance(entity, Ribbon):
        ids = set(entity.outer.loop) | set(entity.inner.loop)
    elif isinstance(entity, (RibbonComplex, RibbonNerve)):
        ids = set()
        for r in entity.ribbons:
            ids |= set(r.outer.loop) | set(r.inner.loop)
    elif isinstance(entity, VortexNerve):
        ids = set()
        for c in entity.cycles:
            ids |= set(c.loop)
    else:
        raise UnsupportedEntityKind(f"no vertex count for {type(entity).__name__}")
    return Fraction(len(ids))


_REGISTRY: Tuple[Probe, ...] = (
    Probe("b0_filaments", _probe_b0),
    Probe("b1_cycles", _probe_b1),
    Probe("b2_holes", _probe_b2),
    Probe("betti_rb", _probe_betti_rb),
    Probe("ribbon_count", _probe_ribbon_count),
    Probe("fixed_point_gradient_angle", _probe_gradient_angle),
    Probe("vertex_count", _probe_vertex_count),
)
_REGISTRY_INDEX = {p.name: i for i, p in enumerate(_REGISTRY)}


def probe_registry() -> Tuple[Probe, ...]:
    """The built-in probes in canonical order."""
    return _REGISTRY


def probe_by_name(name: str) -> Probe:
    idx = _REGISTRY_INDEX.get(name)
    if idx is None:
        raise UnsupportedEntityKind(f"unknown probe {name!r}")
    return _REGISTRY[idx]


def resolve_probes(probes: Union[str, Probe, Iterable[Union[str, Probe]]]) -> Tuple[Probe, ...]:
    """Normalize to Probe objects, ordered by registry position."""
    if isinstance(probes, (str, Probe)):
        probes = [probes]
    resolved = [probe_by_name(p) if isinstance(p, str) else p for p in probes]
    if not resolved:
        raise EmptyCollection("at least one probe is required")
    return tuple(
        sorted(resolved, key=lambda p: _REGISTRY_INDEX.get(p.name, len(_REGISTRY)))
    )


def describe(entity, probes) -> ProbeVector:
    """Feature vector of ``entity`` under the selected probes."""
    if _is_empty(entity):
        raise UnsupportedEntityKind("the empty entity has no description")
    ps = resolve_probes(probes)
    return ProbeVector(
        names=tuple(p.name for p in ps),
        values=tuple(p(entity) for p in ps),
    )


def distance_sq(a, b, probes) -> Fraction:
    """Exact squared Euclidean distance between two descriptions."""
    va = describe(a, probes).values
    vb = describe(b, probes).values
    return sum(((x - y) ** 2 for x, y in zip(va, vb)), Fraction(0))


def dx_near(a, b, probes, th) -> bool:
    """True iff the descriptions differ by strictly less than the threshold."""
    if _is_empty(a) or _is_empty(b):
        return False
    t = as_threshold(th).value
    return distance_sq(a, b, probes) < t * t


def descriptions_match(a, b, probes) -> bool:
    """Degenerate descriptive overlap: the feature vectors are equal."""
    if _is_empty(a) or _is_empty(b):
        return False
    return distance_sq(a, b, probes) == 0


def dx_intersection(ks, ks2, probes, th) -> Tuple[Tuple[object, object], ...]:
    """All cross pairs of near entities; an empty result means far collections."""
    if _is_empty(ks) or _is_empty(ks2):
        return ()
    return tuple(
        (a, b) for a in ks for b in ks2 if dx_near(a, b, probes, th)
    )


def dx_near_collection(a, collection, probes, th) -> bool:
    """Nearness to a collection: near some member."""
    if _is_empty(collection):
        return False
    return any(dx_near(a, b, probes, th) for b in collection)


@dataclass(frozen=True)
class AxiomReport:
    trials: int
    checked: Tuple[str, ...]
    violations: Dict[str, Tuple[str, ...]]

    @property
    def passed(self) -> bool:
        return all(not v for v in self.violations.values())

    def lines(self) -> List[str]:
        out = [f"axiom trials={self.trials} passed={str(self.passed).lower()}"]
        for name in self.checked:
            bad = self.violations[name]
            out.append(f"  {name}: {'ok' if not bad else f'{len(bad)} violations'}")
            out.extend(f"    witness: {w}" for w in bad[:3])
        return out


AXIOMS = ("xdP0", "xdP1", "xdP2", "xdP3", "xdP2_converse")


def check_axioms(universe: Sequence, probes, th, trials: int, seed: int = 0) -> AxiomReport:
    """Randomized verification of the proximity axioms over a finite universe.

    The union in the fourth axiom is interpreted over collections: an
    entity is near the union of two collections exactly when it is near a
    member of one of them.
    """
    if not universe:
        raise EmptyCollection("axiom check needs a nonempty universe")
    rng = random.Random(seed)
    violations: Dict[str, List[str]] = {name: [] for name in AXIOMS}
    universe = list(universe)
    for _ in range(trials):
        a = rng.choice(universe)
        b = rng.choice(universe)
        if dx_near(EMPTY, a, probes, th):
            violations["xdP0"].append(f"EMPTY near {a!r}")
        if dx_near(a, b, probes, th) != dx_near(b, a, probes, th):
            violations["xdP1"].append(f"{a!r} vs {b!r}")
        pair_found = any(x is a and y is b for x, y in dx_intersection((a,), (b,), probes, th))
        near = dx_near(a, b, probes, th)
        if pair_found and not near:
            violations["xdP2"].append(f"{a!r} vs {b!r}")
        if near and not pair_found:
            violations["xdP2_converse"].append(f"{a!r} vs {b!r}")
        bs = rng.sample(universe, rng.randint(1, min(3, len(universe))))
        cs = rng.sample(universe, rng.randint(1, min(3, len(universe))))
        lhs = dx_near_collection(a, tuple(bs) + tuple(cs), probes, th)
        rhs = dx_near_collection(a, bs, probes, th) or dx_near_collection(a, cs, probes, th)
        if lhs != rhs:
            violations["xdP3"].append(f"{a!r} vs {bs!r} u {cs!r}")
    return AxiomReport(
        trials=trials,
        checked=AXIOMS,
        violations={k: tuple(v) for k, v in violations.items()},
    )
