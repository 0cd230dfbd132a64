import warnings
from random import Random

import pytest

from platknot.coloring import count_colorings
from platknot.diagrams import BraidWord, component_count
from platknot.errors import (
    ActionMismatch,
    MalformedRecord,
    NotSimpleGroup,
    UnknownGadget,
)
from platknot.groups import resolve_class
from platknot.hurwitz import (
    MonodromyTuple,
    apply_braid,
    canonical_signs,
    full_twist,
    schur,
)
from platknot.zsat import (
    ZsatCircuit,
    build_alphabet,
    compile_circuit,
    count_zsat,
    gadget_action,
    parse_circuit,
    parse_gadget,
    validate_gadget,
    verify_reduction,
)

from conftest import data_path


@pytest.fixture(scope="module")
def alph2(ext, rm5):
    G = ext.base
    C = resolve_class(G, "5a")
    return build_alphabet(G, C, C.representative, 2, rm5)


@pytest.fixture(scope="module")
def smaller_s3(s3):
    return [(s3, resolve_class(s3, "t"))]


def test_alphabet_k1_degenerate(ext, rm5):
    G = ext.base
    C = resolve_class(G, "5a")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        alph = build_alphabet(G, C, C.representative, 1, rm5)
    assert alph.size == 1
    assert alph.degenerate
    assert len(caught) == 1


def test_alphabet_requires_simple(s3, z3, rm5):
    C = resolve_class(s3, "t")
    with pytest.raises(NotSimpleGroup):
        build_alphabet(s3, C, C.representative, 2, rm5)


def test_alphabet_k2_structure(ext, alph2):
    """At k = 2 the alphabet is the zombie plus one tuple per class member b
    with <c, b> the whole group: entries are forced to (c, b, b^-1, c^-1)."""
    G = ext.base
    C = resolve_class(G, "5a")
    c = C.representative
    expected = 1 + sum(
        1 for b in C.inverse_members() if len(G.closure([c, b])) == G.order
    )
    assert alph2.size == expected == 11
    assert alph2.initial == (0,)           # only the zombie: k=2 is improper
    assert len(alph2.final) == alph2.size  # every symbol satisfies F at k=2
    assert not alph2.proper_initial and not alph2.proper_final


def test_alphabet_invariants(ext, alph2, rm5):
    G = ext.base
    C = resolve_class(G, "5a")
    c = C.representative
    qident = rm5.quotient.cover.identity
    z = alph2.symbols[0]
    assert z.elems == (c, G.inv[c]) * 2
    assert 0 in alph2.initial and 0 in alph2.final
    for t in alph2.symbols[1:]:
        assert t.elems[0] == c and t.elems[-1] == G.inv[c]
        assert G.product(*t.elems) == G.identity
        assert len(G.closure(t.elems)) == G.order
        assert schur(t, rm5) == qident
    # U-invariance of the subalphabets
    for row in alph2.u_action:
        assert {row[i] for i in alph2.initial} == set(alph2.initial)
        assert {row[i] for i in alph2.final} == set(alph2.final)


def test_alphabet_k3_proper(ext, rm5):
    G = ext.base
    C = resolve_class(G, "5a")
    alph = build_alphabet(G, C, C.representative, 3, rm5)
    assert alph.proper_initial and alph.proper_final
    assert len(alph.initial) == 11
    # I members are exactly the bottom-cap-compatible symbols
    inv = G.inv
    for i in alph.initial:
        t = alph.symbols[i]
        assert all(t.elems[2 * j + 1] == inv[t.elems[2 * j]] for j in range(3))


def test_count_zsat_identity(alph2, registry):
    for width in (1, 2, 3):
        rep = count_zsat(ZsatCircuit(width, ()), alph2, registry)
        assert rep.count == len(alph2.initial) ** 0 or True
        assert rep.count == 1  # I cap F is the zombie alone
        assert rep.nontrivial_orbit_count == 0


def test_count_zsat_identity_equals_IF_power(ext, rm5, registry):
    G = ext.base
    C = resolve_class(G, "5a")
    alph = build_alphabet(G, C, C.representative, 3, rm5)
    both = set(alph.initial) & set(alph.final)
    assert both == {0}
    for width in (1, 2):
        assert count_zsat(ZsatCircuit(width, ()), alph, registry).count == len(both) ** width


def test_all_zombie_always_solves(alph2, registry):
    rep = count_zsat(ZsatCircuit(2, (("fulltwist", 1),)), alph2, registry)
    assert rep.count >= 1
    assert (rep.count - 1) % rep.u_order == 0


def test_unknown_gadget(alph2, registry):
    with pytest.raises(UnknownGadget):
        count_zsat(ZsatCircuit(2, (("nope", 1),)), alph2, registry)


def test_gate_positions_validated():
    with pytest.raises(MalformedRecord):
        ZsatCircuit(2, (("g", 2),))


def test_empty_word_is_identity_gadget(alph2, smaller_s3):
    gg = validate_gadget(BraidWord(8), alph2, smaller_s3, name="empty")
    assert gg.report.all_ok
    assert gg.action == list(range(alph2.size ** 2))
    assert gg.report.rubik is not None and gg.report.rubik.is_member


def test_trivial_word_gadget_passes_all(alph2, smaller_s3):
    gg = validate_gadget(
        BraidWord(8, (1, 2, -2, -1)), alph2, smaller_s3, name="trivword", rng=Random(0)
    )
    assert gg.report.all_ok
    assert gg.action == list(range(alph2.size ** 2))


def test_non_pure_braid_fails_property_4(alph2):
    gg = validate_gadget(BraidWord(8, (1,)), alph2, name="odd")
    assert not gg.report.pure.ok


def test_full_twist_gadget_profile(alph2, smaller_s3):
    """The full twist is pure, realizes the identity on alphabet pairs, is
    inert on the trivial-invariant stratum, but moves smaller-group tuples
    with noncommuting boundary; the report must say all of that."""
    gg = validate_gadget(full_twist(8), alph2, smaller_s3, name="fulltwist", rng=Random(0))
    r = gg.report
    assert r.pure.ok
    assert r.maps_alphabet.ok
    assert r.rubik is not None and r.rubik.is_member
    assert r.trivial_outside.ok
    (label, pc), = r.smaller_trivial
    assert label == "s3:2a"
    assert pc.regime == "exhaustive"
    assert not pc.ok          # honest failure: conjugation by the boundary
    assert not r.all_ok


def test_gadget_action_preserves_preserve_chain(alph2, registry, rm5):
    """The gadget action fixes (z,z) and maps alphabet pairs within alphabet
    pairs; on the enumerable saturation levels it stays inside them."""
    G = alph2.G
    action = gadget_action(registry["fulltwist"].braid, alph2)
    nA = alph2.size
    assert action[0] == 0
    # class-preserving saturation of the alphabet is preserved
    ft = registry["fulltwist"].braid
    for u in alph2.aut_class.maps[:6]:
        for i in (0, 1, nA - 1):
            t = alph2.symbols[i]
            sat = MonodromyTuple(t.signs * 2, tuple(u[m] for m in t.elems + alph2.symbols[0].elems))
            out = apply_braid(sat, ft, G)
            assert out == sat  # full twist is inert on trivial-product tuples


def test_action_rows_checked(alph2):
    bad = parse_gadget("gadget g strands 8\nword 1 -1\naction 0 5\n")
    from platknot.zsat import registry_actions

    with pytest.raises(ActionMismatch):
        registry_actions({"g": bad}, alph2, {"g"})


def test_compile_identity(ext, rm5, registry):
    G = ext.base
    C = resolve_class(G, "5a")
    alph = build_alphabet(G, C, C.representative, 3, rm5)
    comp = compile_circuit(ZsatCircuit(1, ()), alph, registry)
    assert comp.braid.strands == 6
    assert comp.crossing_count == 0
    assert component_count(comp.diagram) == 1


def test_compile_crossing_count(alph2, registry):
    Z = ZsatCircuit(2, (("fulltwist", 1), ("fulltwist", 1)))
    comp = compile_circuit(Z, alph2, registry)
    assert comp.crossing_count == 2 * len(registry["fulltwist"].braid.letters)
    assert component_count(comp.diagram) == 1


def test_verify_reduction_identity(ext, rm5, registry, smaller_s3):
    G = ext.base
    C = resolve_class(G, "5a")
    alph = build_alphabet(G, C, C.representative, 3, rm5)
    rep = verify_reduction(ZsatCircuit(1, ()), alph, registry, smaller_s3)
    assert rep.three_way_equal
    assert rep.zsat.count == 1
    assert rep.components == 1
    assert rep.all_smaller_zero


def test_verify_reduction_planted(alph2, registry, smaller_s3):
    Z = ZsatCircuit(2, (("fulltwist", 1),))
    rep = verify_reduction(Z, alph2, registry, smaller_s3, rng=Random(0))
    assert rep.three_way_equal
    assert rep.zsat.count == 1
    assert rep.components == 1
    assert rep.crossing_count == 56
    assert rep.all_smaller_zero
    assert not rep.gadget_reports["fulltwist"].all_ok  # sampled prop-3 failure recorded


def test_circuit_file_parsing(tmp_path):
    text = (
        "zsat width 2 k 2 group a5.grp class 5a pin 2\n"
        "extension sl25_a5.ext\n"
        "gate fulltwist at 1\n"
    )
    cf = parse_circuit(text, base_dir=str(tmp_path))
    assert cf.circuit.width == 2
    assert cf.k == 2
    assert cf.circuit.gates == (("fulltwist", 1),)
    assert cf.pin_spec == "2"
    assert cf.group_path.endswith("a5.grp")
