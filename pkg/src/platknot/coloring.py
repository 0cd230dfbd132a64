"""Exact counting of class-restricted colorings.

A coloring assigns to every arc an element of the allowed class set so that
each crossing satisfies its conjugation relation.  Counting is exact integer
arithmetic throughout.  Two independent algorithms are provided:

* the Wirtinger counter: constraint propagation (a crossing whose over-arc
  and one under-arc are known determines the other under-arc) with
  backtracking on arcs no propagation reaches, ordered breadth-first from the
  pinned arc so plat-compiled diagrams branch only at their bottom caps;
* the plat transfer counter: enumerate bottom-cap colorings as monodromy
  tuples, push them through the braid by the Hurwitz action, and keep those
  compatible with the top caps (iterated innermost-pair cancellation).

On any plat closure the two agree arc for arc, which the test suite exercises
as a cross-algorithm oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Iterable

from .diagrams import BraidWord, DOWN, UP, KnotDiagram, PlatPairing, strand_directions
from .errors import DivisibilityViolation, SignMismatch
from .groups import AutGroup, ConjClass, FiniteGroup, automorphism_group
from .hurwitz import _apply_letters


def _domain(G: FiniteGroup, C) -> tuple[int, ...]:
    if isinstance(C, ConjClass):
        return C.members
    return tuple(sorted(set(C)))


def _solve(
    d: KnotDiagram,
    G: FiniteGroup,
    domain: tuple[int, ...],
    pin: tuple[int, int] | None = None,
    collect: Callable[[dict[int, int]], None] | None = None,
) -> int:
    arcs = d.arcs
    if not arcs:
        return 1
    aidx = {a: i for i, a in enumerate(arcs)}
    n = len(arcs)
    crossings = [
        (c.sign, aidx[c.over], aidx[c.under_in], aidx[c.under_out])
        for c in d.crossings
    ]
    arc_cr: list[list[int]] = [[] for _ in range(n)]
    for ci, (_, o, ui, uo) in enumerate(crossings):
        for a in {o, ui, uo}:
            arc_cr[a].append(ci)

    # branch order: breadth-first from the pinned arc through shared crossings
    start = aidx[pin[0]] if pin else 0
    order, seen = [], [False] * n
    queue = [start]
    seen[start] = True
    while True:
        while queue:
            a = queue.pop(0)
            order.append(a)
            for ci in arc_cr[a]:
                _, o, ui, uo = crossings[ci]
                for b in (o, ui, uo):
                    if not seen[b]:
                        seen[b] = True
                        queue.append(b)
        rest = [i for i in range(n) if not seen[i]]
        if not rest:
            break
        seen[rest[0]] = True
        queue.append(rest[0])

    mul, inv = G.mul, G.inv
    dset = set(domain)
    assign = [-1] * n

    def rel_out(sign: int, o: int, ui: int) -> int:
        return mul[mul[inv[o]][ui]][o] if sign > 0 else mul[mul[o][ui]][inv[o]]

    def rel_in(sign: int, o: int, uo: int) -> int:
        return mul[mul[o][uo]][inv[o]] if sign > 0 else mul[mul[inv[o]][uo]][o]

    def propagate(a: int, trail: list[int]) -> bool:
        queue = [a]
        while queue:
            x = queue.pop()
            for ci in arc_cr[x]:
                s, o, ui, uo = crossings[ci]
                vo, vi, vu = assign[o], assign[ui], assign[uo]
                if vo < 0:
                    continue
                if vi >= 0:
                    need = rel_out(s, vo, vi)
                    if vu >= 0:
                        if need != vu:
                            return False
                    elif need in dset:
                        assign[uo] = need
                        trail.append(uo)
                        queue.append(uo)
                    else:
                        return False
                elif vu >= 0:
                    need = rel_in(s, vo, vu)
                    if need in dset:
                        assign[ui] = need
                        trail.append(ui)
                        queue.append(ui)
                    else:
                        return False
        return True

    def rec(idx: int) -> int:
        while idx < n and assign[order[idx]] >= 0:
            idx += 1
        if idx == n:
            if collect is not None:
                collect({arcs[i]: assign[i] for i in range(n)})
            return 1
        a = order[idx]
        total = 0
        for val in domain:
            assign[a] = val
            trail = [a]
            if propagate(a, trail):
                total += rec(idx + 1)
            for t in trail:
                assign[t] = -1
        return total

    if pin is not None:
        arc, val = pin
        if val not in dset:
            return 0
        assign[aidx[arc]] = val
        trail = [aidx[arc]]
        if not propagate(aidx[arc], trail):
            return 0
        return rec(0)
    return rec(0)


def count_colorings(d: KnotDiagram, G: FiniteGroup, C) -> int:
    """Number of colorings of the arcs by elements of C."""
    return _solve(d, G, _domain(G, C))


def count_pinned(d: KnotDiagram, arc: int, G: FiniteGroup, c: int, C=None) -> int:
    """Colorings with the designated arc fixed to c; the allowed set defaults
    to the conjugacy class of c."""
    domain = _domain(G, C) if C is not None else G.class_of(c).members
    return _solve(d, G, domain, pin=(arc, c))


def enumerate_pinned(d: KnotDiagram, arc: int, G: FiniteGroup, c: int, C=None):
    found: list[dict[int, int]] = []
    domain = _domain(G, C) if C is not None else G.class_of(c).members
    _solve(d, G, domain, pin=(arc, c), collect=found.append)
    return found


@dataclass
class QReport:
    pinned: int
    surjective_pinned: int
    surjective_total: int
    q: int
    aut_point_order: int
    aut_class_order: int


def count_q(
    d: KnotDiagram,
    G: FiniteGroup,
    C: ConjClass,
    pin_arc: int | None = None,
    c: int | None = None,
    aut: AutGroup | None = None,
) -> QReport:
    """Surjective pinned colorings and their count modulo the c-fixing
    automorphisms, whose action is free on surjections (so divisibility is
    asserted, not assumed)."""
    c = C.representative if c is None else c
    pin_arc = min(d.arcs) if pin_arc is None else pin_arc
    aut = automorphism_group(G) if aut is None else aut
    point = aut.aut_point(c)
    klass = aut.aut_class(C)
    colorings = enumerate_pinned(d, pin_arc, G, c, C)
    surj = 0
    for col in colorings:
        if len(G.closure(set(col.values()))) == G.order:
            surj += 1
    if surj % len(point):
        raise DivisibilityViolation(
            f"{surj} surjective pinned colorings not divisible by |Aut(G,c)| = {len(point)}"
        )
    return QReport(
        pinned=len(colorings),
        surjective_pinned=surj,
        surjective_total=surj * len(C),
        q=surj // len(point),
        aut_point_order=len(point),
        aut_class_order=len(klass),
    )


@dataclass
class BreakdownBucket:
    label: str
    subgroup_order: int
    is_cyclic: bool
    aut_point_order: int
    pinned_count: int
    q: int


@dataclass
class BreakdownReport:
    total: int                      # count_colorings, reconstructed
    class_size: int
    pinned: int
    buckets: list[BreakdownBucket]

    @property
    def reconstructed_total(self) -> int:
        return self.class_size * sum(b.pinned_count for b in self.buckets)


def _subgroup_as_group(G: FiniteGroup, members: tuple[int, ...]) -> tuple[FiniteGroup, dict[int, int]]:
    index = {g: i for i, g in enumerate(members)}
    mul = [[index[G.mul[a][b]] for b in members] for a in members]
    sub = FiniteGroup(order=len(members), mul=mul, identity=index[G.identity], name=f"sub{len(members)}")
    return sub, index


def image_breakdown(
    d: KnotDiagram,
    G: FiniteGroup,
    C: ConjClass,
    pin_arc: int | None = None,
    c: int | None = None,
) -> BreakdownReport:
    """Partition the pinned colorings by the conjugacy class of the pair
    (image subgroup, pinned element); summing |C| * bucket sizes reproduces
    the plain count, and each bucket size splits as |Aut(J,c)| * q_J."""
    c = C.representative if c is None else c
    pin_arc = min(d.arcs) if pin_arc is None else pin_arc
    colorings = enumerate_pinned(d, pin_arc, G, c, C)
    mul, inv = G.mul, G.inv

    canon_cache: dict[frozenset[int], tuple] = {}

    def canon(J: frozenset[int]) -> tuple:
        got = canon_cache.get(J)
        if got is None:
            best = None
            for g in range(G.order):
                ig = inv[g]
                Jg = tuple(sorted(mul[mul[g][x]][ig] for x in J))
                cg = mul[mul[g][c]][ig]
                key = (cg, Jg)
                if best is None or key < best:
                    best = key
            canon_cache[J] = got = best
        return got

    buckets: dict[tuple, int] = {}
    for col in colorings:
        J = G.closure(set(col.values()))
        key = canon(J)
        buckets[key] = buckets.get(key, 0) + 1

    rows: list[BreakdownBucket] = []
    order_seen: dict[int, int] = {}
    for (c_rep, members), count in sorted(buckets.items(), key=lambda kv: (len(kv[0][1]), kv[0])):
        sub, index = _subgroup_as_group(G, members)
        aut_point = automorphism_group(sub).aut_point(index[c_rep])
        if count % len(aut_point):
            raise DivisibilityViolation(
                f"bucket of order {len(members)} has {count} colorings, "
                f"not divisible by {len(aut_point)}"
            )
        tag = order_seen.get(len(members), 0)
        order_seen[len(members)] = tag + 1
        cyclic = len(sub.closure([index[c_rep]])) == sub.order
        rows.append(
            BreakdownBucket(
                label=f"J{len(members)}{chr(ord('a') + tag)}",
                subgroup_order=len(members),
                is_cyclic=cyclic,
                aut_point_order=len(aut_point),
                pinned_count=count,
                q=count // len(aut_point),
            )
        )
    return BreakdownReport(
        total=len(C) * len(colorings),
        class_size=len(C),
        pinned=len(colorings),
        buckets=rows,
    )


# -- transfer-matrix counting through plats ------------------------------------


def plat_transfer_count(
    b: BraidWord,
    p: PlatPairing,
    G: FiniteGroup,
    C,
    pin: tuple[int, int] | None = None,
    signs: tuple[int, ...] | None = None,
) -> int:
    """Count colorings of the plat closure without building the diagram:
    bottom-cap colorings become monodromy tuples, the braid acts on them, and
    survivors must cancel through the top caps innermost-pair first.

    ``pin`` fixes the arc color at a bottom position (1-based).  ``signs``
    optionally overrides the canonical bottom sign layout; every cap must
    join opposite signs, and the braid must carry them to cap-opposite signs
    at the top.
    """
    domain = _domain(G, C)
    s = b.strands
    if p.strands != s:
        raise SignMismatch(f"braid has {s} strands, pairing wants {p.strands}")
    dirs, _ = strand_directions(b, p)
    if signs is not None:
        if len(signs) != s or any(x not in (1, -1) for x in signs):
            raise SignMismatch("need one sign (+1/-1) per strand")
        dirs = [DOWN if x > 0 else UP for x in signs]
    for a, c2 in p.bottom:
        if dirs[a - 1] == dirs[c2 - 1]:
            raise SignMismatch(f"bottom cap ({a},{c2}) joins equal signs")
    perm = b.permutation()
    top_dir = [0] * s
    for q in range(s):
        top_dir[perm[q]] = dirs[q]
    for a, c2 in p.top:
        if top_dir[a - 1] == top_dir[c2 - 1]:
            raise SignMismatch(f"top cap ({a},{c2}) joins equal signs")

    caps = sorted((min(a, c2), max(a, c2)) for a, c2 in p.bottom)
    pin_cap = pin_val = None
    if pin is not None:
        pos, pin_val = pin
        if pin_val not in set(domain):
            return 0
        for i, (a, c2) in enumerate(caps):
            if pos in (a, c2):
                pin_cap = i
        if pin_cap is None:
            raise SignMismatch(f"pin position {pos} is not a bottom endpoint")

    # top caps as a matching for the cancellation stack
    pair_of = [0] * s
    for pid, (a, c2) in enumerate(p.top):
        pair_of[a - 1] = pid
        pair_of[c2 - 1] = pid

    mul, inv = G.mul, G.inv
    letters = b.letters
    base_signs = [1 if d == DOWN else -1 for d in dirs]
    free_caps = [i for i in range(len(caps)) if i != pin_cap]
    count = 0
    for combo in iproduct(domain, repeat=len(free_caps)):
        colors = [0] * len(caps)
        for i, val in zip(free_caps, combo):
            colors[i] = val
        if pin_cap is not None:
            colors[pin_cap] = pin_val
        elems = [0] * s
        for (a, c2), col in zip(caps, colors):
            for pos in (a - 1, c2 - 1):
                elems[pos] = col if dirs[pos] == DOWN else inv[col]
        sg = list(base_signs)
        _apply_letters(sg, elems, letters, mul, inv)
        stack: list[tuple[int, int]] = []
        ok = True
        for pos in range(s):
            pid = pair_of[pos]
            if stack and stack[-1][0] == pid:
                if elems[pos] != inv[stack[-1][1]]:
                    ok = False
                    break
                stack.pop()
            else:
                stack.append((pid, elems[pos]))
        if ok and not stack:
            count += 1
    return count
