import pytest

from platknot.errors import BadOrbitStructure
from platknot.groups import automorphism_group
from platknot.rubik import USet, _sym_generators, analyze_orbits, is_rubik_member, rubik_report


@pytest.fixture(scope="module")
def tiny_uset(z3):
    """One fixed point plus three free orbits of the order-2 group Aut(Z3)."""
    U = automorphism_group(z3)
    states = ["z"] + [(i, u) for i in range(3) for u in range(len(U))]

    def act(umap, s):
        if s == "z":
            return "z"
        i, u = s
        return (i, U.maps.index(U.compose(umap, U.maps[u])))

    return USet.build(U, states, act)


def _orbit_cycle(n_orbits, perm_of_orbits, uset):
    """Permutation of states realizing an aligned orbit permutation."""
    u_per_orbit = len(uset.U)
    pi = [0]
    for i in range(n_orbits):
        for u in range(u_per_orbit):
            pi.append(1 + perm_of_orbits[i] * u_per_orbit + u)
    return pi


def test_identity_is_member(tiny_uset):
    assert is_rubik_member(tiny_uset, list(range(7)), "z")


def test_three_cycle_is_member(tiny_uset):
    pi = _orbit_cycle(3, [1, 2, 0], tiny_uset)
    rep = rubik_report(tiny_uset, pi, "z")
    assert rep.exact_checked and rep.exact_member
    assert is_rubik_member(tiny_uset, pi, "z")


def test_transposition_is_not_member(tiny_uset):
    pi = _orbit_cycle(3, [1, 0, 2], tiny_uset)
    rep = rubik_report(tiny_uset, pi, "z")
    assert not rep.even_on_orbits
    assert rep.exact_checked and rep.exact_member is False
    assert not is_rubik_member(tiny_uset, pi, "z")


def test_single_twist_not_member(tiny_uset):
    # twisting one orbit by the nontrivial automorphism lands outside the
    # commutator subgroup (the acting group is abelian)
    pi = list(range(7))
    pi[1], pi[2] = pi[2], pi[1]
    rep = rubik_report(tiny_uset, pi, "z")
    assert rep.even_on_orbits and not rep.components_in_derived
    assert rep.exact_member is False


def test_double_twist_is_member(tiny_uset):
    # twisting two orbits by the same element multiplies to the identity in
    # the abelianization
    pi = list(range(7))
    pi[1], pi[2] = pi[2], pi[1]
    pi[3], pi[4] = pi[4], pi[3]
    assert is_rubik_member(tiny_uset, pi, "z")


def test_membership_invariant_under_symmetry_conjugation(tiny_uset):
    struct = analyze_orbits(tiny_uset, "z")
    gens = _sym_generators(tiny_uset, struct)
    pi = _orbit_cycle(3, [1, 2, 0], tiny_uset)

    def compose(p, q):
        return [p[x] for x in q]

    def invert(p):
        out = [0] * len(p)
        for i, x in enumerate(p):
            out[x] = i
        return out

    for g in gens[:6]:
        conj = compose(compose(list(g), pi), invert(list(g)))
        assert is_rubik_member(tiny_uset, conj, "z")


def test_bad_orbit_structure(z3, s3):
    U = automorphism_group(z3)
    # two fixed points
    states = ["z", "w"] + [(0, u) for u in range(len(U))]

    def act(umap, s):
        if isinstance(s, str):
            return s
        i, u = s
        return (i, U.maps.index(U.compose(umap, U.maps[u])))

    uset = USet.build(U, states, act)
    with pytest.raises(BadOrbitStructure):
        analyze_orbits(uset)
