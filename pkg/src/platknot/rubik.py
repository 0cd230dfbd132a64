"""Membership testing in the commutator subgroup of the equivariant symmetry
group of a pointed U-set.

The U-sets handled here decompose as one fixed point plus free orbits, so the
equivariant symmetries form a restricted wreath product U wr Sym(n) over the n
free orbits.  Its commutator subgroup consists of the equivariant maps whose
induced orbit permutation is even and whose wreath components multiply into
[U, U]; that abelianization criterion is the production test, and at tiny
sizes an exact closure computation certifies it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import BadOrbitStructure
from .groups import AutGroup

DEFAULT_EXACT_ORBITS = 8
DEFAULT_EXACT_GROUP_CAP = 200_000


@dataclass
class USet:
    """A finite U-set given by explicit states and an action callback; the
    action is tabulated as index permutations, one per element of U."""

    U: AutGroup
    states: list[Hashable]
    act_table: list[list[int]]
    index: dict[Hashable, int]

    @classmethod
    def build(cls, U: AutGroup, states: Sequence[Hashable], act: Callable) -> "USet":
        states = list(states)
        index = {s: i for i, s in enumerate(states)}
        if len(index) != len(states):
            raise BadOrbitStructure("duplicate states")
        table = []
        for u in U.maps:
            row = []
            for s in states:
                t = act(u, s)
                j = index.get(t)
                if j is None:
                    raise BadOrbitStructure("state set is not closed under U")
                row.append(j)
            table.append(row)
        return cls(U=U, states=states, act_table=table, index=index)

    def orbits(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.states)
        out = []
        for i in range(len(self.states)):
            if seen[i]:
                continue
            orb = sorted({row[i] for row in self.act_table})
            for j in orb:
                seen[j] = True
            out.append(tuple(orb))
        return out


@dataclass
class OrbitStructure:
    fixed: int                       # index of the unique fixed state
    free_orbits: list[tuple[int, ...]]
    orbit_of: list[int]              # state index -> orbit number (fixed = 0)


def analyze_orbits(uset: USet, expected_fixed: Hashable | None = None) -> OrbitStructure:
    """Verify the fixed-point-plus-free-orbits shape and index the orbits."""
    nU = len(uset.U)
    orbits = uset.orbits()
    fixed = [o[0] for o in orbits if len(o) == 1]
    if nU == 1:
        if expected_fixed is None:
            raise BadOrbitStructure("trivial U needs an explicit fixed point")
        fixed = [uset.index[expected_fixed]]
    if len(fixed) != 1:
        raise BadOrbitStructure(f"expected one fixed state, found {len(fixed)}")
    free = []
    for o in orbits:
        if nU == 1 and o[0] == fixed[0]:
            continue
        if len(o) == 1 and o[0] == fixed[0]:
            continue
        if len(o) != nU:
            raise BadOrbitStructure(f"orbit of size {len(o)} is not free")
        free.append(o)
    if expected_fixed is not None and uset.index[expected_fixed] != fixed[0]:
        raise BadOrbitStructure("fixed state is not the expected one")
    free.sort()
    orbit_of = [-1] * len(uset.states)
    orbit_of[fixed[0]] = 0
    for n, o in enumerate(free, start=1):
        for j in o:
            orbit_of[j] = n
    return OrbitStructure(fixed=fixed[0], free_orbits=free, orbit_of=orbit_of)


@dataclass
class RubikReport:
    equivariant: bool
    fixes_point: bool
    even_on_orbits: bool
    components_in_derived: bool
    exact_checked: bool
    exact_member: bool | None

    @property
    def is_member(self) -> bool:
        ok = (
            self.equivariant
            and self.fixes_point
            and self.even_on_orbits
            and self.components_in_derived
        )
        if self.exact_checked:
            return bool(self.exact_member)
        return ok


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def rubik_report(
    uset: USet,
    pi: Sequence[int],
    expected_fixed: Hashable | None = None,
    exact_orbit_cap: int = DEFAULT_EXACT_ORBITS,
    exact_group_cap: int = DEFAULT_EXACT_GROUP_CAP,
) -> RubikReport:
    """Run the equivariance / fixed-point / evenness / abelianization tests on
    the permutation ``pi`` of the states, with the exact closure certificate
    at tiny sizes."""
    struct = analyze_orbits(uset, expected_fixed)
    U = uset.U
    n_states = len(uset.states)
    if sorted(pi) != list(range(n_states)):
        raise BadOrbitStructure("pi is not a permutation of the states")

    equivariant = all(
        pi[row[i]] == row[pi[i]] for row in uset.act_table for i in range(n_states)
    )
    fixes_point = pi[struct.fixed] == struct.fixed

    n_orbits = len(struct.free_orbits) + 1
    induced = [-1] * n_orbits
    consistent = True
    for i in range(n_states):
        a, b = struct.orbit_of[i], struct.orbit_of[pi[i]]
        if induced[a] < 0:
            induced[a] = b
        elif induced[a] != b:
            consistent = False
    even = consistent and _perm_sign(induced) == 1

    components_ok = False
    if equivariant and fixes_point and consistent:
        components_ok = _components_in_derived(uset, struct, pi)

    exact_checked = False
    exact_member: bool | None = None
    n_free = len(struct.free_orbits)
    if n_free <= exact_orbit_cap:
        size = len(U) ** n_free
        for i in range(2, n_free + 1):
            size *= i
        if size <= exact_group_cap:
            exact_checked = True
            exact_member = _exact_membership(uset, struct, tuple(pi), exact_group_cap)

    return RubikReport(
        equivariant=equivariant,
        fixes_point=fixes_point,
        even_on_orbits=even,
        components_in_derived=components_ok,
        exact_checked=exact_checked,
        exact_member=exact_member,
    )


def is_rubik_member(uset: USet, pi: Sequence[int], expected_fixed: Hashable | None = None) -> bool:
    report = rubik_report(uset, pi, expected_fixed)
    if report.exact_checked and report.exact_member != (
        report.equivariant
        and report.fixes_point
        and report.even_on_orbits
        and report.components_in_derived
    ):
        raise BadOrbitStructure("exact check disagrees with the wreath criteria")
    return report.is_member


def _components_in_derived(uset: USet, struct: OrbitStructure, pi: Sequence[int]) -> bool:
    """Write pi in wreath coordinates over orbit representatives and test the
    component product against [U, U]."""
    U = uset.U
    reps = [min(o) for o in struct.free_orbits]
    prod = U.identity_map()
    for r in reps:
        target = pi[r]
        t_orbit = struct.orbit_of[target] - 1
        comp = None
        for ui, row in enumerate(uset.act_table):
            if row[reps[t_orbit]] == target:
                comp = U.maps[ui]
                break
        if comp is None:
            return False
        prod = U.compose(prod, comp)
    return prod in U.derived_subgroup()


def _sym_generators(uset: USet, struct: OrbitStructure) -> list[tuple[int, ...]]:
    """Generators of the full equivariant symmetry group: per-orbit U-twists
    and equivariant orbit swaps."""
    n = len(uset.states)
    gens = []
    reps = [min(o) for o in struct.free_orbits]
    # for each state in a free orbit, the U element carrying its rep to it
    carrier = [-1] * n
    for orb_no, orb in enumerate(struct.free_orbits):
        r = reps[orb_no]
        for ui, row in enumerate(uset.act_table):
            carrier[row[r]] = ui
    # single-orbit twists generate the base of the wreath product
    for ui in range(len(uset.U)):
        for orb_no, orb in enumerate(struct.free_orbits):
            r = reps[orb_no]
            g = list(range(n))
            for j in orb:
                w = carrier[j]
                g[j] = uset.act_table[w][uset.act_table[ui][r]]
            gens.append(tuple(g))
    for a in range(len(struct.free_orbits)):
        for b in range(a + 1, len(struct.free_orbits)):
            g = list(range(n))
            ra, rb = reps[a], reps[b]
            for w in range(len(uset.U)):
                g[uset.act_table[w][ra]] = uset.act_table[w][rb]
                g[uset.act_table[w][rb]] = uset.act_table[w][ra]
            gens.append(tuple(g))
    return gens


def _exact_membership(
    uset: USet, struct: OrbitStructure, pi: tuple[int, ...], cap: int
) -> bool:
    """Exact Rubik-group membership: close commutators of the equivariant
    symmetry generators under product and conjugation, then test pi."""
    gens = _sym_generators(uset, struct)

    def mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(p[x] for x in q)

    def inv(p: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(p)
        for i, x in enumerate(p):
            out[x] = i
        return tuple(out)

    # commutators of generators are inverse-closed ([a,b]^-1 = [b,a]); the
    # derived subgroup is their normal closure
    seed = set()
    for a in gens:
        ia = inv(a)
        for b in gens:
            seed.add(mul(mul(a, b), mul(ia, inv(b))))
    derived = set(seed)
    derived.add(tuple(range(len(uset.states))))
    gen_invs = [inv(g) for g in gens]
    changed = True
    while changed:
        changed = False
        for x in list(derived):
            for g, gi in zip(gens, gen_invs):
                p = mul(mul(g, x), gi)
                if p not in derived:
                    derived.add(p)
                    seed.add(p)
                    changed = True
        frontier = list(derived)
        while frontier:
            nxt = []
            for x in frontier:
                for y in list(seed):
                    p = mul(x, y)
                    if p not in derived:
                        derived.add(p)
                        nxt.append(p)
                        changed = True
            if len(derived) > cap:
                raise BadOrbitStructure("exact membership closure exceeded budget")
            frontier = nxt
    return pi in derived
