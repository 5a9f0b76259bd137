"""Planar ribbon toolkit: exact CW complexes, ribbons, nerves and counters."""

from .betti import (
    BettiTriple,
    RibbonComplexBetti,
    betti_rb,
    betti_rb_vnrv,
    betti_rbnrv,
    betti_rbnrv_vnrv,
    betti_rbx,
    betti_triple,
)
from .complexes import (
    Cell,
    CellComplex,
    CellKind,
    ValidityReport,
    boundary,
    closure,
    interior,
    validate_cw,
)
from .division import (
    Frame,
    PartitionReport,
    RegionLabel,
    classify_region,
    frame_around,
    verify_partition,
)
from .document import ComplexDocument, parse_document, serialize_document
from .fixedpoint import CellMap, filament_retraction_map, fixed_cells, gradient_angle
from .geometry import (
    Orientation,
    Point2,
    PointLocation,
    orientation,
    point,
    point_in_polygon,
    simple_polygon,
    to_fraction,
)
from .homology import (
    Bitmap,
    NerveCheckReport,
    cubical_betti,
    nerve_theorem_check,
    rasterize,
    z2_betti,
)
from .nerves import Region, SimplicialComplex, common_witness, nerve, ribbon_nerve
from .proximity import (
    EMPTY,
    AxiomReport,
    Probe,
    ProbeVector,
    Threshold,
    check_axioms,
    describe,
    descriptions_match,
    distance_sq,
    dx_intersection,
    dx_near,
    dx_near_collection,
    probe_registry,
)
from .ribbons import (
    Filament,
    FilledCycle,
    Hole,
    Ribbon,
    RibbonComplex,
    RibbonMembership,
    RibbonNerve,
    VortexNerve,
    is_concentric,
    is_nested,
    make_filled_cycle,
    make_ribbon,
    ribbon_membership,
    ribbon_nerves_of_vortex_nerve,
    ribbons_of_vortex_nerve,
)
from .svgrender import render_svg

__version__ = "0.1.0"
