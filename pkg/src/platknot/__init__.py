"""Conjugacy-class coloring counts of knot diagrams, Hurwitz braid actions on
monodromy tuples, and the equivariant-circuit-to-knot compiler, with every
count cross-checkable by an independent algorithm at desk scale."""

from .coloring import (
    BreakdownReport,
    QReport,
    count_colorings,
    count_pinned,
    count_q,
    image_breakdown,
    plat_transfer_count,
)
from .diagrams import (
    BraidWord,
    KnotDiagram,
    PlatPairing,
    adjacent_pairing,
    component_count,
    convert_pd4,
    load_diagram,
    parse_braid,
    parse_pd,
    parse_plat,
    plat_closure,
    serialize,
    trace_plat,
    wirtinger,
)
from .extensions import (
    CentralExtension,
    ReducedMultiplier,
    load_extension,
    parse_extension,
    reduced_multiplier,
    trivial_extension,
)
from .groups import (
    AutGroup,
    ConjClass,
    FiniteGroup,
    automorphism_group,
    conjugacy_class,
    generates,
    group_from_permutations,
    group_from_table,
    load_group,
    parse_group,
    resolve_class,
)
from .hurwitz import (
    MonodromyTuple,
    apply_braid,
    boundary_product,
    density_scan,
    enumerate_orbits,
    full_twist,
    gadget_search,
    parse_tuple,
    pure_braid_generators,
    schur,
    stratify,
    zombie,
)
from .rubik import USet, is_rubik_member, rubik_report
from .zsat import (
    CircuitFile,
    GadgetFile,
    ZsatAlphabet,
    ZsatCircuit,
    build_alphabet,
    compile_circuit,
    count_zsat,
    load_registry,
    parse_circuit,
    parse_gadget,
    validate_gadget,
    verify_reduction,
)

__version__ = "0.1.0"
