"""Braid actions on monodromy tuples of a twice-punctured-sign disk.

Convention (uniform counterclockwise loops)
-------------------------------------------
A length-2k tuple assigns to puncture j a sign and a group element m_j, the
monodromy of a counterclockwise loop.  Positive punctures carry entries in C,
negative punctures entries in C^-1.  Loops are composed like functions
(rightmost traversed first), so the boundary of the disk reads as the ordered
product m_1 m_2 ... m_2k.

The classical alternating convention (clockwise loops at even punctures, all
entries in C, boundary word g_2k^-1 g_2k-1 ... g_2^-1 g_1 composed
path-first) maps to this one by inverting the entries at even punctures; the
boundary word then evaluates, rightmost letter first, to exactly the uniform
ordered product.  Tests re-derive this identity on random tuples.

The braid generator s_i acts by (m_i, m_i+1) -> (m_i m_i+1 m_i^-1, m_i) and
swaps the two signs; its inverse by (m_i, m_i+1) -> (m_i+1, m_i+1^-1 m_i
m_i+1).  The ordered product, the signed class multiset, the stratum flags,
and the Schur invariant are all preserved.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, Iterator

from .diagrams import BraidWord
from .errors import (
    BaseNotPerfect,
    BudgetExceeded,
    LiftAmbiguity,
    PlatknotError,
    StrandMismatch,
)
from .extensions import ReducedMultiplier
from .groups import ConjClass, FiniteGroup

DEFAULT_STATE_BUDGET = 10**8


class SchurUndefined(PlatknotError):
    code = "SchurUndefined"


@dataclass(frozen=True)
class MonodromyTuple:
    """Signs and group elements of the 2k punctures, in left-to-right order."""

    signs: tuple[int, ...]
    elems: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != len(self.elems):
            raise StrandMismatch("signs and entries have different lengths")
        if any(s not in (1, -1) for s in self.signs):
            raise StrandMismatch("signs must be +1 or -1")

    def __len__(self) -> int:
        return len(self.elems)

    def literal(self, G: FiniteGroup | None = None) -> str:
        toks = []
        for s, m in zip(self.signs, self.elems):
            toks.append(("+" if s > 0 else "-") + (G.label(m) if G and G.labels else str(m)))
        return "[" + " ".join(toks) + "]"


_TOKEN_RE = re.compile(r"([+-])\s*[A-Za-z]*?(\d+)")


def parse_tuple(text: str) -> MonodromyTuple:
    """Parse a tuple literal like ``[+3 -7 +3 -7]`` (optional letter prefixes
    before the element indices are ignored)."""
    toks = _TOKEN_RE.findall(text)
    if not toks:
        raise StrandMismatch(f"no tuple entries in {text!r}")
    signs = tuple(1 if s == "+" else -1 for s, _ in toks)
    elems = tuple(int(x) for _, x in toks)
    return MonodromyTuple(signs, elems)


def canonical_signs(k: int) -> tuple[int, ...]:
    return tuple(1 if i % 2 == 0 else -1 for i in range(2 * k))


def zombie(k: int, G: FiniteGroup, c: int) -> MonodromyTuple:
    """(c, c^-1, c, c^-1, ...) on the canonical sign layout."""
    ci = G.inv[c]
    return MonodromyTuple(canonical_signs(k), tuple(c if i % 2 == 0 else ci for i in range(2 * k)))


def validate_tuple(t: MonodromyTuple, G: FiniteGroup, C: ConjClass) -> bool:
    cp, cm = set(C.members), set(C.inverse_members())
    return all(
        (m in cp) if s > 0 else (m in cm) for s, m in zip(t.signs, t.elems)
    )


# -- the action ---------------------------------------------------------------


def _apply_letters(
    signs: list[int], elems: list[int], letters: Iterable[int], mul, inv
) -> None:
    for x in letters:
        i = x - 1 if x > 0 else -x - 1
        a, b = elems[i], elems[i + 1]
        if x > 0:
            elems[i] = mul[mul[a][b]][inv[a]]
            elems[i + 1] = a
        else:
            elems[i] = b
            elems[i + 1] = mul[mul[inv[b]][a]][b]
        signs[i], signs[i + 1] = signs[i + 1], signs[i]


def apply_braid(t: MonodromyTuple, w: BraidWord, G: FiniteGroup) -> MonodromyTuple:
    """Hurwitz action of the braid word; preserves the ordered product."""
    if w.strands != len(t):
        raise StrandMismatch(f"braid on {w.strands} strands, tuple of length {len(t)}")
    signs, elems = list(t.signs), list(t.elems)
    _apply_letters(signs, elems, w.letters, G.mul, G.inv)
    return MonodromyTuple(tuple(signs), tuple(elems))


def boundary_product(t: MonodromyTuple, G: FiniteGroup) -> int:
    return G.product(*t.elems)


@dataclass(frozen=True)
class StratumFlags:
    in_T: bool
    in_Rhat: bool
    in_R: bool
    sch: int | None = None         # element of the quotient-cover kernel
    sch_trivial: bool | None = None


def stratify(
    t: MonodromyTuple,
    G: FiniteGroup,
    C: ConjClass,
    rm: ReducedMultiplier | None = None,
) -> StratumFlags:
    in_T = validate_tuple(t, G, C)
    in_Rhat = in_T and boundary_product(t, G) == G.identity
    in_R = in_Rhat and len(G.closure(t.elems)) == G.order
    sch_val = None
    sch_triv = None
    if rm is not None and in_Rhat:
        sch_val = schur(t, rm)
        sch_triv = sch_val == rm.quotient.cover.identity
    return StratumFlags(in_T, in_Rhat, in_R, sch_val, sch_triv)


def schur(t: MonodromyTuple, rm: ReducedMultiplier) -> int:
    """Ordered product of the canonical lifts; positive entries lift into the
    designated class, negative entries to the inverse of the lift of their
    inverse.  Defined for tuples with trivial boundary product."""
    qcov = rm.quotient.cover
    G = rm.parent.base
    lift = rm.lift
    acc = qcov.identity
    qmul, qinv = qcov.mul, qcov.inv
    for s, m in zip(t.signs, t.elems):
        if s > 0:
            up = lift.get(m)
        else:
            down = lift.get(G.inv[m])
            up = None if down is None else qinv[down]
        if up is None:
            raise LiftAmbiguity(f"entry {m} has no canonical lift (not in C)")
        acc = qmul[acc][up]
    if rm.quotient.proj[acc] != G.identity:
        raise SchurUndefined("tuple has nontrivial boundary product")
    return acc


def paper_to_uniform(paper_elems: Iterable[int], G: FiniteGroup) -> MonodromyTuple:
    """Translate an alternating-convention tuple (all entries in C, clockwise
    loops at even punctures) into the uniform convention by inverting the
    even-position entries."""
    elems = list(paper_elems)
    inv = G.inv
    out = tuple(m if i % 2 == 0 else inv[m] for i, m in enumerate(elems))
    return MonodromyTuple(canonical_signs(len(elems) // 2), out)


# -- slice enumeration and orbits ----------------------------------------------


def _slice_domains(k: int, C: ConjClass) -> list[tuple[int, ...]]:
    cp = C.members
    cm = C.inverse_members()
    return [cp if i % 2 == 0 else cm for i in range(2 * k)]


def enumerate_rhat_slice(k: int, G: FiniteGroup, C: ConjClass) -> Iterator[tuple[int, ...]]:
    """All canonical-sign tuples with trivial ordered product; the last entry
    is solved from the prefix, cutting the enumeration by a factor of |C|."""
    domains = _slice_domains(k, C)
    mul, inv = G.mul, G.inv
    last_domain = set(domains[-1])
    n = 2 * k
    prefix = [0] * n

    def rec(pos: int, acc: int) -> Iterator[tuple[int, ...]]:
        if pos == n - 1:
            need = inv[acc]
            if need in last_domain:
                prefix[pos] = need
                yield tuple(prefix)
            return
        for m in domains[pos]:
            prefix[pos] = m
            yield from rec(pos + 1, mul[acc][m])

    yield from rec(0, G.identity)


STRATA = ("Rhat", "R", "Rhat0", "R0")


def _stratum_filter(stratum: str, G: FiniteGroup, rm: ReducedMultiplier | None):
    if stratum not in STRATA:
        raise PlatknotError(f"unknown stratum {stratum!r}; pick one of {STRATA}")
    need_surj = stratum in ("R", "R0")
    need_sch0 = stratum in ("Rhat0", "R0")
    if need_sch0 and rm is None:
        raise PlatknotError(f"stratum {stratum} needs a reduced multiplier")

    def keep(elems: tuple[int, ...], signs: tuple[int, ...]) -> bool:
        if need_surj and len(G.closure(elems)) != G.order:
            return False
        if need_sch0:
            val = schur(MonodromyTuple(signs, elems), rm)
            if val != rm.quotient.cover.identity:
                return False
        return True

    return keep


@dataclass
class OrbitRow:
    orbit_id: int
    slice_size: int
    full_size: int
    sch_label: str
    sample: str


@dataclass
class OrbitReport:
    k: int
    stratum: str
    class_label: str
    slice_states: int
    rows: list[OrbitRow]
    orbit_count: int
    orbit_count_up_to_conj: int
    sch_constant: bool


def enumerate_orbits(
    k: int,
    G: FiniteGroup,
    C: ConjClass,
    rm: ReducedMultiplier | None = None,
    stratum: str = "R",
    budget: int = DEFAULT_STATE_BUDGET,
    rng: Random | None = None,
) -> OrbitReport:
    """Partition the canonical-sign stratum into colored-braid-group orbits.

    The search walks full braid-group orbits (all sign patterns) under every
    generator and its inverse; two canonical-slice states are in the same
    colored orbit exactly when they meet in the same full orbit, because any
    braid returning the slice to itself preserves the labels.  Generator
    application order may be randomized; the resulting partition must not
    depend on it.
    """
    if len(C) ** (2 * k) > budget:
        raise BudgetExceeded(f"|C|^(2k) = {len(C) ** (2 * k)} exceeds budget {budget}")
    keep = _stratum_filter(stratum, G, rm)
    signs0 = canonical_signs(k)
    slice_states = [
        e for e in enumerate_rhat_slice(k, G, C) if keep(e, signs0)
    ]
    gens = list(range(1, 2 * k)) + [-i for i in range(1, 2 * k)]
    if rng is not None:
        rng.shuffle(gens)
    mul, inv = G.mul, G.inv

    orbit_of: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    rows: list[OrbitRow] = []
    total_visited = 0
    slice_set = set(slice_states)
    qident = rm.quotient.cover.identity if rm is not None else None
    sch_constant = True

    for start in slice_states:
        key0 = (signs0, start)
        if key0 in orbit_of:
            continue
        oid = len(rows)
        frontier = [key0]
        orbit_of[key0] = oid
        members_in_slice = [start]
        full = 1
        while frontier:
            nxt = []
            for signs, elems in frontier:
                for g in gens:
                    s2, e2 = list(signs), list(elems)
                    _apply_letters(s2, e2, (g,), mul, inv)
                    key = (tuple(s2), tuple(e2))
                    if key not in orbit_of:
                        orbit_of[key] = oid
                        nxt.append(key)
                        full += 1
                        if key[0] == signs0 and key[1] in slice_set:
                            members_in_slice.append(key[1])
            total_visited += len(nxt)
            if total_visited > budget:
                raise BudgetExceeded(f"orbit walk exceeded {budget} states")
            frontier = nxt
        sch_label = ""
        if rm is not None:
            vals = {schur(MonodromyTuple(signs0, e), rm) for e in members_in_slice}
            if len(vals) != 1:
                sch_constant = False
            sch_label = "/".join(sorted(rm.multiplier_label(v) for v in vals))
        sample = MonodromyTuple(signs0, min(members_in_slice)).literal()
        rows.append(OrbitRow(oid, len(members_in_slice), full, sch_label, sample))

    # orbits modulo simultaneous conjugation, which commutes with the action
    parent = list(range(len(rows)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    mins = {}
    for key, oid in orbit_of.items():
        if key[0] == signs0 and key[1] in slice_set:
            if oid not in mins or key[1] < mins[oid]:
                mins[oid] = key[1]
    for oid, e in mins.items():
        for h in range(G.order):
            conj = tuple(mul[mul[h][m]][inv[h]] for m in e)
            other = orbit_of.get((signs0, conj))
            if other is not None:
                ra, rb = find(oid), find(other)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    up_to_conj = len({find(i) for i in range(len(rows))})

    return OrbitReport(
        k=k,
        stratum=stratum,
        class_label=C.label,
        slice_states=len(slice_states),
        rows=rows,
        orbit_count=len(rows),
        orbit_count_up_to_conj=up_to_conj,
        sch_constant=sch_constant,
    )


# -- density scan ----------------------------------------------------------------


@dataclass
class DensityRow:
    k: int
    count: int
    ratio: Fraction
    count0: int | None = None
    ratio0: Fraction | None = None


def _pair_weights(G: FiniteGroup, C: ConjClass) -> list[int]:
    """w[x] = number of pairs (u, v) in C x C^-1 with uv = x; the normalized
    transition matrix M[h][g] = w[h^-1 g]/|C|^2 is symmetric and doubly
    stochastic with diagonal 1/|C|."""
    w = [0] * G.order
    mul = G.mul
    for u in C.members:
        row = mul[u]
        for v in C.inverse_members():
            w[row[v]] += 1
    return w


def density_scan(
    G: FiniteGroup,
    C: ConjClass,
    rm: ReducedMultiplier | None,
    k_max: int,
    budget: int = DEFAULT_STATE_BUDGET,
) -> list[DensityRow]:
    """Exact counts of trivial-product tuples per k, by dynamic programming on
    the distribution of partial products (one doubly-stochastic step per
    puncture pair).  With a reduced multiplier, the same walk in the quotient
    cover counts the trivial-Schur-invariant subset."""
    if not G.is_perfect():
        raise BaseNotPerfect(f"group {G.name!r} is not perfect")
    if k_max * G.order * G.order > budget:
        raise BudgetExceeded("density scan exceeds state budget")

    def walk(H: FiniteGroup, cls: ConjClass) -> list[int]:
        w = _pair_weights(H, cls)
        support = [(x, wx) for x, wx in enumerate(w) if wx]
        dist = [0] * H.order
        dist[H.identity] = 1
        mul = H.mul
        out = []
        for _ in range(k_max):
            new = [0] * H.order
            for h, dh in enumerate(dist):
                if not dh:
                    continue
                row = mul[h]
                for x, wx in support:
                    new[row[x]] += dh * wx
            dist = new
            out.append(dist[H.identity])
        return out

    counts = walk(G, C)
    counts0 = None
    if rm is not None:
        counts0 = walk(rm.quotient.cover, rm.lifted_class)

    rows = []
    size = len(C)
    for k in range(1, k_max + 1):
        denom = size ** (2 * k)
        row = DensityRow(k=k, count=counts[k - 1], ratio=Fraction(counts[k - 1], denom))
        if counts0 is not None:
            row.count0 = counts0[k - 1]
            row.ratio0 = Fraction(counts0[k - 1], denom)
        rows.append(row)
    return rows


# -- pure-braid gadget search -----------------------------------------------------


def pure_braid_generators(n: int) -> list[BraidWord]:
    """Band generators A_ij = s_j-1 ... s_i+1 s_i^2 s_i+1^-1 ... s_j-1^-1 of
    the pure braid group on n strands."""
    gens = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            pre = list(range(j - 1, i, -1))
            word = pre + [i, i] + [-x for x in reversed(pre)]
            gens.append(BraidWord(n, tuple(word)))
    return gens


def full_twist(n: int) -> BraidWord:
    """The square of the half twist; central, and acts on any tuple with
    trivial boundary product as the identity."""
    base = list(range(1, n))
    return BraidWord(n, tuple(base * n))


def gadget_search(
    k: int,
    G: FiniteGroup,
    C: ConjClass,
    rm: ReducedMultiplier | None,
    target: dict[MonodromyTuple, MonodromyTuple],
    constraints: Iterable[tuple[FiniteGroup, ConjClass]] = (),
    depth_cap: int = 4,
    budget: int = 200_000,
) -> BraidWord | None:
    """Bidirectional breadth-first search over pure-braid band-generator words
    whose action matches ``target`` on the tracked states.  Targets violating
    an action invariant (sign pattern, boundary product, Schur invariant) are
    rejected immediately; exhausting the depth cap returns None, a normal
    outcome since existence is only guaranteed in the large-k limit.
    """
    n = 2 * k
    tracked = sorted(target, key=lambda t: (t.signs, t.elems))
    if not tracked:
        return BraidWord(n)
    mul, inv = G.mul, G.inv
    for src in tracked:
        dst = target[src]
        if len(src) != n or len(dst) != n:
            raise StrandMismatch("target states must have 2k entries")
        if src.signs != dst.signs:
            return None
        if boundary_product(src, G) != boundary_product(dst, G):
            return None
        if rm is not None:
            if boundary_product(src, G) == G.identity and schur(src, rm) != schur(dst, rm):
                return None

    gens = pure_braid_generators(n)
    gens = gens + [g.inverse() for g in gens]

    def act_state(state: tuple, letters) -> tuple:
        s, e = list(state[0]), list(state[1])
        _apply_letters(s, e, letters, mul, inv)
        return (tuple(s), tuple(e))

    start_sig = tuple((t.signs, t.elems) for t in tracked)
    goal_sig = tuple((target[t].signs, target[t].elems) for t in tracked)
    if start_sig == goal_sig:
        return BraidWord(n)

    fwd: dict[tuple, tuple] = {start_sig: ()}
    bwd: dict[tuple, tuple] = {goal_sig: ()}
    fwd_frontier = [start_sig]
    bwd_frontier = [goal_sig]
    depth = 0
    while depth < depth_cap:
        depth += 1
        grow_fwd = len(fwd) <= len(bwd)
        frontier = fwd_frontier if grow_fwd else bwd_frontier
        table = fwd if grow_fwd else bwd
        other = bwd if grow_fwd else fwd
        nxt = []
        for sig in frontier:
            word = table[sig]
            for gi, gen in enumerate(gens):
                letters = gen.letters if grow_fwd else BraidWord(n, gen.letters).inverse().letters
                new_sig = tuple(act_state(st, letters) for st in sig)
                if new_sig in table:
                    continue
                new_word = word + (gi,)
                table[new_sig] = new_word
                nxt.append(new_sig)
                if new_sig in other:
                    fw = table[new_sig] if grow_fwd else other[new_sig]
                    bw = other[new_sig] if grow_fwd else table[new_sig]
                    letters_out: list[int] = []
                    for g in fw:
                        letters_out.extend(gens[g].letters)
                    for g in reversed(bw):
                        letters_out.extend(gens[g].letters)
                    return BraidWord(n, tuple(letters_out))
                if len(fwd) + len(bwd) > budget:
                    return None
        if grow_fwd:
            fwd_frontier = nxt
        else:
            bwd_frontier = nxt
        if not nxt:
            return None
    return None
