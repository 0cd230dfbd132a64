from fractions import Fraction
from random import Random

import pytest

from platknot.diagrams import BraidWord
from platknot.errors import BaseNotPerfect, BudgetExceeded
from platknot.groups import resolve_class
from platknot.hurwitz import (
    MonodromyTuple,
    apply_braid,
    boundary_product,
    canonical_signs,
    density_scan,
    enumerate_orbits,
    enumerate_rhat_slice,
    full_twist,
    gadget_search,
    parse_tuple,
    paper_to_uniform,
    pure_braid_generators,
    schur,
    stratify,
    zombie,
    _pair_weights,
)

from oracles import random_noncrossing


def _random_tuple(G, C, k, rng):
    cp, cm = C.members, C.inverse_members()
    elems = tuple(rng.choice(cp if i % 2 == 0 else cm) for i in range(2 * k))
    return MonodromyTuple(canonical_signs(k), elems)


def _random_rhat(G, C, k, rng):
    cp, cm = C.members, C.inverse_members()
    cmset = set(cm)
    while True:
        elems = [rng.choice(cp if i % 2 == 0 else cm) for i in range(2 * k - 1)]
        need = G.inv[G.product(*elems)]
        if need in cmset:
            elems.append(need)
            return MonodromyTuple(canonical_signs(k), tuple(elems))


def _random_word(strands, length, rng):
    return BraidWord(
        strands,
        tuple(rng.choice([i for i in range(-(strands - 1), strands) if i]) for _ in range(length)),
    )


def test_generator_formulas(a5):
    # sigma_1 on (a, b) gives (a b a^-1, a) and preserves the product
    C = resolve_class(a5, "5a")
    a, b = C.members[0], C.members[3]
    t = MonodromyTuple((1, -1), (a, a5.inv[b]))
    out = apply_braid(t, BraidWord(2, (1,)), a5)
    ab = a5.mul[a][a5.inv[b]]
    assert out.elems == (a5.mul[a5.mul[a][a5.inv[b]]][a5.inv[a]], a)
    assert out.signs == (-1, 1)
    assert boundary_product(out, a5) == ab


def test_action_axioms(a5):
    rng = Random(2)
    C = resolve_class(a5, "5a")
    for _ in range(200):
        k = rng.randint(1, 3)
        t = _random_tuple(a5, C, k, rng)
        i = rng.randint(1, 2 * k - 1)
        w = BraidWord(2 * k, (i, -i))
        assert apply_braid(t, w, a5) == t
        w2 = BraidWord(2 * k, (-i, i))
        assert apply_braid(t, w2, a5) == t


def test_braid_relations_on_states(a5):
    rng = Random(3)
    C = resolve_class(a5, "5a")
    for _ in range(120):
        k = rng.randint(2, 3)
        t = _random_tuple(a5, C, k, rng)
        i = rng.randint(1, 2 * k - 2)
        lhs = apply_braid(t, BraidWord(2 * k, (i, i + 1, i)), a5)
        rhs = apply_braid(t, BraidWord(2 * k, (i + 1, i, i + 1)), a5)
        assert lhs == rhs
        if 2 * k >= 4:
            j = i + 2 if i + 2 <= 2 * k - 1 else i - 2
            if 1 <= j <= 2 * k - 1:
                assert apply_braid(t, BraidWord(2 * k, (i, j)), a5) == apply_braid(
                    t, BraidWord(2 * k, (j, i)), a5
                )


def test_invariants_preserved(a5, rm5):
    rng = Random(4)
    C = resolve_class(a5, "5a")
    for _ in range(300):
        k = rng.randint(1, 3)
        t = _random_tuple(a5, C, k, rng)
        w = _random_word(2 * k, rng.randint(0, 8), rng)
        t2 = apply_braid(t, w, a5)
        assert boundary_product(t, a5) == boundary_product(t2, a5)
        f1, f2 = stratify(t, a5, C), stratify(t2, a5, C)
        assert (f1.in_T, f1.in_Rhat, f1.in_R) == (f2.in_T, f2.in_Rhat, f2.in_R)
        assert sorted(zip(t.signs, [a5.class_of(m).label for m in t.elems])) == sorted(
            zip(t2.signs, [a5.class_of(m).label for m in t2.elems])
        )


def test_boundary_of_zombie(a5):
    C = resolve_class(a5, "5a")
    z = zombie(3, a5, C.representative)
    assert boundary_product(z, a5) == a5.identity


def test_stratify_flags(a5):
    C = resolve_class(a5, "5a")
    z = zombie(2, a5, C.representative)
    f = stratify(z, a5, C)
    assert f.in_T and f.in_Rhat and not f.in_R
    rng = Random(9)
    t = _random_rhat(a5, C, 2, rng)
    while len(a5.closure(t.elems)) != a5.order:
        t = _random_rhat(a5, C, 2, rng)
    f = stratify(t, a5, C)
    assert f.in_R
    # nontrivial product lands in T only
    bad = MonodromyTuple((1, -1), (C.members[0], a5.inv[C.members[1]]))
    f = stratify(bad, a5, C)
    assert f.in_T and not f.in_Rhat


def test_paper_convention_rederivation(a5):
    """Translating an alternating-convention tuple by inverting even
    positions makes the uniform ordered product evaluate the boundary word
    g_2k^-1 g_2k-1 ... g_2^-1 g_1 with its letters composed rightmost
    first."""
    rng = Random(13)
    C = resolve_class(a5, "5a")
    for _ in range(100):
        k = rng.randint(1, 3)
        paper = [rng.choice(C.members) for _ in range(2 * k)]
        t = paper_to_uniform(paper, a5)
        # boundary word letters in path order: g_2k^-1, g_2k-1, ..., g_2^-1, g_1
        letters = []
        for j in range(2 * k, 0, -1):
            letters.append(a5.inv[paper[j - 1]] if j % 2 == 0 else paper[j - 1])
        # function-order composition = product of the reversed letter list
        val = a5.product(*reversed(letters))
        assert boundary_product(t, a5) == val


def test_schur_zombie_trivial(rm5):
    G = rm5.parent.base
    c = rm5.base_class.representative
    for k in (1, 2, 3):
        assert schur(zombie(k, G, c), rm5) == rm5.quotient.cover.identity


def test_schur_vanishes_on_plat_compatible(rm5):
    """Every tuple factoring through a bottom cap system has trivial
    invariant; exhaustive over all non-crossing pairings at k = 2."""
    G = rm5.parent.base
    C = rm5.base_class
    qident = rm5.quotient.cover.identity
    pairings = [((1, 2), (3, 4)), ((1, 4), (2, 3))]
    for pairing in pairings:
        for x in C.members:
            for y in C.members:
                colors = {pairing[0]: x, pairing[1]: y}
                elems = [0] * 4
                signs = list(canonical_signs(2))
                for (a, b), col in colors.items():
                    # the cap arc meets position a downward, position b upward
                    elems[a - 1] = col if signs[a - 1] == 1 else G.inv[col]
                    elems[b - 1] = col if signs[b - 1] == 1 else G.inv[col]
                t = MonodromyTuple(tuple(signs), tuple(elems))
                if boundary_product(t, G) != G.identity:
                    continue
                assert schur(t, rm5) == qident


def test_schur_additive_on_concatenation(rm5):
    G = rm5.parent.base
    C = rm5.base_class
    qmul = rm5.quotient.cover.mul
    rng = Random(17)
    for _ in range(100):
        t1 = _random_rhat(G, C, rng.randint(1, 2), rng)
        t2 = _random_rhat(G, C, rng.randint(1, 2), rng)
        cat = MonodromyTuple(t1.signs + t2.signs, t1.elems + t2.elems)
        assert schur(cat, rm5) == qmul[schur(t1, rm5)][schur(t2, rm5)]


def test_schur_braid_invariant(rm5):
    G = rm5.parent.base
    C = rm5.base_class
    rng = Random(19)
    for _ in range(100):
        k = rng.randint(1, 3)
        t = _random_rhat(G, C, k, rng)
        w = _random_word(2 * k, rng.randint(1, 8), rng)
        assert schur(apply_braid(t, w, G), rm5) == schur(t, rm5)


def test_orbits_k1(s3, a5):
    """At k = 1 the trivial-boundary stratum is a copy of C and the colored
    braid group acts trivially (the generator squared is the full twist), so
    raw orbits are singletons; global conjugation fuses them into one."""
    C = resolve_class(s3, "t")
    rep = enumerate_orbits(1, s3, C, None, stratum="Rhat")
    assert rep.slice_states == 3
    assert rep.orbit_count == 3
    assert all(r.slice_size == 1 for r in rep.rows)
    assert rep.orbit_count_up_to_conj == 1


def test_orbits_a5_k2(a5, ext, rm5):
    G = ext.base
    C = resolve_class(G, "5a")
    rep = enumerate_orbits(2, G, C, rm5, stratum="R")
    assert rep.slice_states == 600
    assert rep.sch_constant
    assert sum(r.slice_size for r in rep.rows) == rep.slice_states
    base = sorted((r.slice_size, r.sch_label) for r in rep.rows)
    for seed in (1, 2, 3):
        again = enumerate_orbits(2, G, C, rm5, stratum="R", rng=Random(seed))
        assert sorted((r.slice_size, r.sch_label) for r in again.rows) == base


def test_orbits_budget(a5):
    C = resolve_class(a5, "5a")
    with pytest.raises(BudgetExceeded):
        enumerate_orbits(3, a5, C, None, stratum="Rhat", budget=100)


def test_full_twist_acts_trivially_on_rhat(a5):
    C = resolve_class(a5, "5a")
    rng = Random(29)
    ft = full_twist(4)
    for _ in range(50):
        t = _random_rhat(a5, C, 2, rng)
        assert apply_braid(t, ft, a5) == t


def test_density_k1_exact(a5):
    for label in ("2a", "5a", "3a"):
        C = resolve_class(a5, label)
        rows = density_scan(a5, C, None, 1)
        assert rows[0].count == len(C)
        assert rows[0].ratio == Fraction(1, len(C))


def test_density_matches_direct_enumeration(a5, ext, rm2):
    C5 = resolve_class(a5, "5a")
    rows = density_scan(a5, C5, None, 2)
    for k in (1, 2):
        direct = sum(1 for _ in enumerate_rhat_slice(k, a5, C5))
        assert rows[k - 1].count == direct
    G = ext.base
    C2 = resolve_class(G, "2a")
    rows = density_scan(G, C2, rm2, 2)
    for k in (1, 2):
        direct = sum(1 for _ in enumerate_rhat_slice(k, G, C2))
        assert rows[k - 1].count == direct


def test_density_transition_properties(a5):
    """The pair-step transition matrix is symmetric, doubly stochastic, and
    has constant diagonal 1/|C| after normalization."""
    C = resolve_class(a5, "2a")
    w = _pair_weights(a5, C)
    n2 = len(C) ** 2
    assert sum(w) == n2
    assert w[a5.identity] == len(C)
    for x in range(a5.order):
        assert w[x] == w[a5.inv[x]]


def test_density_requires_perfect(s3):
    C = resolve_class(s3, "t")
    with pytest.raises(BaseNotPerfect):
        density_scan(s3, C, None, 3)


def test_density_quotient_column(ext, rm5):
    G = ext.base
    C = resolve_class(G, "5a")
    rows = density_scan(G, C, rm5, 4)
    for r in rows:
        assert r.count0 is not None
        assert r.count0 <= r.count
    # trivial-invariant tuples are counted by the same walk upstairs
    from platknot.hurwitz import canonical_signs as cs

    G_, qid = ext.base, rm5.quotient.cover.identity
    direct = 0
    for elems in enumerate_rhat_slice(2, G, C):
        if schur(MonodromyTuple(cs(2), elems), rm5) == qid:
            direct += 1
    assert rows[1].count0 == direct


def test_gadget_search_identity(s3):
    C = resolve_class(s3, "t")
    states = [
        MonodromyTuple(canonical_signs(2), e) for e in enumerate_rhat_slice(2, s3, C)
    ]
    w = gadget_search(2, s3, C, None, {t: t for t in states}, depth_cap=2)
    assert w is not None and w.letters == ()


def test_gadget_search_planted(s3):
    C = resolve_class(s3, "t")
    states = [
        MonodromyTuple(canonical_signs(2), e) for e in enumerate_rhat_slice(2, s3, C)
    ]
    rng = Random(5)
    gens = pure_braid_generators(4)
    letters = []
    for _ in range(3):
        letters.extend(rng.choice(gens).letters)
    planted = BraidWord(4, tuple(letters))
    target = {t: apply_braid(t, planted, s3) for t in states}
    found = gadget_search(2, s3, C, None, target, depth_cap=6)
    assert found is not None
    for t in states:
        assert apply_braid(t, found, s3) == target[t]


def test_gadget_search_rejects_invariant_violations(s3, ext, rm5):
    C = resolve_class(s3, "t")
    states = [
        MonodromyTuple(canonical_signs(2), e) for e in enumerate_rhat_slice(2, s3, C)
    ]
    target = {t: t for t in states}
    flipped = MonodromyTuple((-1, 1, 1, -1), states[0].elems)
    target[states[0]] = flipped
    assert gadget_search(2, s3, C, None, target, depth_cap=2) is None
    # a target moving a tuple across invariant values is rejected fast
    G = ext.base
    C5 = resolve_class(G, "5a")
    slice5 = [
        MonodromyTuple(canonical_signs(2), e)
        for e in enumerate_rhat_slice(2, G, C5)
    ]
    by_sch = {}
    for t in slice5:
        by_sch.setdefault(schur(t, rm5), t)
    if len(by_sch) >= 2:
        a, b = list(by_sch.values())[:2]
        bad = {t: t for t in slice5}
        bad[a], bad[b] = b, a
        assert gadget_search(2, G, C5, rm5, bad, depth_cap=2) is None


def test_tuple_literals(a5):
    t = parse_tuple("[+2 -18 +2 -18]")
    assert t.signs == (1, -1, 1, -1)
    assert t.elems == (2, 18, 2, 18)
    assert parse_tuple(t.literal()) == t
