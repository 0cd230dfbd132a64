"""Finite groups as multiplication tables over element indices 0..n-1.

Two on-disk representations are supported by the line-oriented group file
format (see ``parse_group``):

* ``table``: an explicit n x n multiplication table; validated exhaustively
  (associativity, two-sided identity, two-sided inverses) for n <= 512.
* ``perm <m>``: cycle-notation generators acting on points 1..m; the group is
  the closure of the generators, enumerated breadth-first so element indexing
  is deterministic.  Products are composed as functions (right factor acts
  first).

Element 0 is always the identity.  Conjugacy classes are labelled ATLAS-style
(``2a``, ``5b``, ...) by element order, then class size, then minimal member
index; group files may add ``alias`` lines for friendlier names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce

from .errors import (
    AutCapExceeded,
    BadIdentity,
    MalformedGroupFile,
    NonAssociativeTable,
    NonBijectiveRow,
    OrderCapExceeded,
    UnknownClass,
)

DEFAULT_ORDER_CAP = 10**6
DEFAULT_AUT_CAP = 360
FULL_TABLE_CAP = 512


class _LazyTable:
    """Row-on-demand multiplication table for permutation groups past the
    full-table cap.  Indexing behaves like a list of rows."""

    def __init__(self, elems: list[tuple[int, ...]], index: dict[tuple[int, ...], int]):
        self._elems = elems
        self._index = index
        self._rows: dict[int, list[int]] = {}

    def __len__(self) -> int:
        return len(self._elems)

    def __getitem__(self, i: int) -> list[int]:
        row = self._rows.get(i)
        if row is None:
            p = self._elems[i]
            index = self._index
            # function composition: (p*q)(x) = p(q(x))
            row = [index[tuple(p[x] for x in q)] for q in self._elems]
            self._rows[i] = row
        return row


@dataclass
class FiniteGroup:
    """A finite group with elements 0..order-1 and a total product table."""

    order: int
    mul: list[list[int]] | _LazyTable
    identity: int
    name: str = "group"
    labels: list[str] | None = None          # printable element names
    class_aliases: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.inv = self._inverse_table()
        self._classes: list[ConjClass] | None = None
        self._class_of: list[int] | None = None
        self._orders: list[int] | None = None

    def _inverse_table(self) -> list[int]:
        e = self.identity
        inv = [-1] * self.order
        for a in range(self.order):
            row = self.mul[a]
            for b in range(self.order):
                if row[b] == e:
                    if self.mul[b][a] != e:
                        raise NonBijectiveRow(f"element {a} has no two-sided inverse")
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise NonBijectiveRow(f"element {a} has no inverse")
        return inv

    # -- basic element arithmetic ------------------------------------------

    def product(self, *elems: int) -> int:
        return reduce(lambda a, b: self.mul[a][b], elems, self.identity)

    def conj(self, g: int, h: int) -> int:
        """h g h^-1."""
        return self.mul[self.mul[h][g]][self.inv[h]]

    def element_order(self, g: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.order
        if self._orders[g] == 0:
            n, x = 1, g
            while x != self.identity:
                x = self.mul[x][g]
                n += 1
            self._orders[g] = n
        return self._orders[g]

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels else str(g)

    # -- subgroups ----------------------------------------------------------

    def closure(self, gens) -> frozenset[int]:
        """Subgroup generated by ``gens`` (indices)."""
        seen = {self.identity}
        seen.update(gens)
        frontier = list(seen)
        while frontier:
            nxt = []
            for a in frontier:
                row = self.mul[a]
                for b in list(seen):
                    for p in (row[b], self.mul[b][a]):
                        if p not in seen:
                            seen.add(p)
                            nxt.append(p)
            frontier = nxt
        return frozenset(seen)

    def commutator_subgroup(self) -> frozenset[int]:
        comms = set()
        for a in range(self.order):
            ia = self.inv[a]
            for b in range(self.order):
                comms.add(self.mul[self.mul[a][b]][self.mul[ia][self.inv[b]]])
        return self.closure(comms)

    def is_perfect(self) -> bool:
        return len(self.commutator_subgroup()) == self.order

    def is_abelian(self) -> bool:
        return all(
            self.mul[a][b] == self.mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def is_simple(self) -> bool:
        """True iff nonabelian simple: every nontrivial class normally
        generates the whole group."""
        if self.order == 1 or self.is_abelian():
            return False
        for cls in self.conjugacy_classes():
            if cls.representative == self.identity:
                continue
            if len(self.closure(cls.members)) != self.order:
                return False
        return True

    # -- conjugacy classes ----------------------------------------------------

    def conjugacy_classes(self) -> list[ConjClass]:
        if self._classes is None:
            assigned = [-1] * self.order
            classes: list[ConjClass] = []
            for g in range(self.order):
                if assigned[g] >= 0:
                    continue
                members = sorted({self.conj(g, h) for h in range(self.order)})
                idx = len(classes)
                for m in members:
                    assigned[m] = idx
                classes.append(ConjClass(self, tuple(members), members[0]))
            self._class_of = assigned
            _attach_labels(self, classes)
            self._classes = classes
        return self._classes

    def class_of(self, g: int) -> ConjClass:
        classes = self.conjugacy_classes()
        return classes[self._class_of[g]]


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class: sorted member set plus its minimal representative."""

    group: FiniteGroup
    members: tuple[int, ...]
    representative: int
    label: str = ""

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in set(self.members)

    def inverse_members(self) -> tuple[int, ...]:
        inv = self.group.inv
        return tuple(sorted(inv[m] for m in self.members))


def _attach_labels(G: FiniteGroup, classes: list[ConjClass]) -> None:
    order_key = sorted(
        range(len(classes)),
        key=lambda i: (
            G.element_order(classes[i].representative),
            len(classes[i]),
            classes[i].representative,
        ),
    )
    counters: dict[int, int] = {}
    for i in order_key:
        o = G.element_order(classes[i].representative)
        n = counters.get(o, 0)
        counters[o] = n + 1
        label = f"{o}{chr(ord('a') + n)}"
        classes[i] = ConjClass(G, classes[i].members, classes[i].representative, label)


def conjugacy_class(G: FiniteGroup, g: int) -> ConjClass:
    """The class {h g h^-1 : h in G} with minimal-index representative."""
    if not 0 <= g < G.order:
        raise IndexError(f"element index {g} out of range")
    return G.class_of(g)


def generates(G: FiniteGroup, S) -> bool:
    """True iff the closure of S under the product is all of G."""
    S = list(S)
    if not S:
        raise ValueError("generating set must be nonempty")
    return len(G.closure(S)) == G.order


def resolve_class(G: FiniteGroup, spec: str) -> ConjClass:
    """Find a conjugacy class by label, alias, ``#<element index>``, or (for
    permutation groups) a cycle-notation member."""
    spec = spec.strip()
    classes = G.conjugacy_classes()
    name = G.class_aliases.get(spec, spec)
    for cls in classes:
        if cls.label == name:
            return cls
    if spec.startswith("#"):
        return G.class_of(int(spec[1:]))
    if spec.startswith("(") and G.labels:
        try:
            return G.class_of(G.labels.index(_normalize_cycles(spec)))
        except ValueError:
            pass
    if spec.isdigit():
        return G.class_of(int(spec))
    raise UnknownClass(f"no conjugacy class {spec!r} in group {G.name!r}")


# -- permutation utilities ---------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, m: int) -> tuple[int, ...]:
    """Parse cycle notation on points 1..m into a 0-based permutation tuple."""
    perm = list(range(m))
    for body in _CYCLE_RE.findall(text):
        pts = [int(tok) - 1 for tok in body.replace(",", " ").split()]
        if not pts:
            continue
        if any(not 0 <= p < m for p in pts) or len(set(pts)) != len(pts):
            raise MalformedGroupFile(f"bad cycle {body!r} on {m} points")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def cycle_string(perm: tuple[int, ...]) -> str:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [i], perm[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        out.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(out) if out else "()"


def _normalize_cycles(text: str) -> str:
    pts = [int(t) for body in _CYCLE_RE.findall(text) for t in body.replace(",", " ").split()]
    m = max(pts) if pts else 1
    return cycle_string(parse_cycles(text, m))


def close_permutations(
    gens: list[tuple[int, ...]], order_cap: int = DEFAULT_ORDER_CAP
) -> list[tuple[int, ...]]:
    """Breadth-first closure of permutation generators; identity comes first,
    then elements in discovery order."""
    if not gens:
        raise MalformedGroupFile("no generators")
    m = len(gens[0])
    ident = tuple(range(m))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[x] for x in g)  # g first, then p
                if q not in index:
                    if len(elems) >= order_cap:
                        raise OrderCapExceeded(
                            f"closure exceeds order cap {order_cap}"
                        )
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    return elems


def group_from_permutations(
    gens: list[tuple[int, ...]],
    name: str = "permgroup",
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    elems = close_permutations(gens, order_cap)
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    if n <= FULL_TABLE_CAP:
        mul = [[index[tuple(p[x] for x in q)] for q in elems] for p in elems]
    else:
        mul = _LazyTable(elems, index)
    return FiniteGroup(
        order=n,
        mul=mul,
        identity=0,
        name=name,
        labels=[cycle_string(p) for p in elems],
    )


# -- group file parsing -------------------------------------------------------


def parse_group(text: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Parse a group file: header ``group <name> order <n>`` followed by a
    ``table`` block or a ``perm <m>`` generator block, plus optional
    ``alias <name> <classlabel>`` lines."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedGroupFile("empty group file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "group" or head[2] != "order":
        raise MalformedGroupFile(f"bad header {lines[0]!r}")
    name, order = head[1], int(head[3])
    aliases = {}
    body = []
    for ln in lines[1:]:
        if ln.startswith("alias "):
            parts = ln.split()
            if len(parts) != 3:
                raise MalformedGroupFile(f"bad alias line {ln!r}")
            aliases[parts[1]] = parts[2]
        else:
            body.append(ln)
    if not body:
        raise MalformedGroupFile("missing table/perm block")

    if body[0] == "table":
        rows = [[int(tok) for tok in ln.split()] for ln in body[1:]]
        if len(rows) != order or any(len(r) != order for r in rows):
            raise MalformedGroupFile(f"expected {order}x{order} table")
        G = group_from_table(rows, name)
    elif body[0].startswith("perm"):
        parts = body[0].split()
        if len(parts) != 2:
            raise MalformedGroupFile(f"bad perm header {body[0]!r}")
        m = int(parts[1])
        gens = [parse_cycles(ln, m) for ln in body[1:]]
        G = group_from_permutations(gens, name, order_cap)
        if G.order != order:
            raise MalformedGroupFile(
                f"closure has order {G.order}, header says {order}"
            )
    else:
        raise MalformedGroupFile(f"expected 'table' or 'perm <m>', got {body[0]!r}")
    G.class_aliases.update(aliases)
    return G


def group_from_table(rows: list[list[int]], name: str = "group") -> FiniteGroup:
    """Validate a raw multiplication table: bijective rows/columns, a
    two-sided identity, exhaustive associativity (order <= 512)."""
    n = len(rows)
    full = set(range(n))
    for i, row in enumerate(rows):
        if set(row) != full:
            raise NonBijectiveRow(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise NonBijectiveRow(f"column {j} is not a permutation of 0..{n - 1}")
    ident = None
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            ident = e
            break
    if ident is None:
        raise BadIdentity("table has no two-sided identity")
    if ident != 0:
        # renumber so the identity is element 0
        swap = list(range(n))
        swap[0], swap[ident] = ident, 0
        rows = [[swap[rows[swap[a]][swap[b]]] for b in range(n)] for a in range(n)]
        ident = 0
    if n > FULL_TABLE_CAP:
        raise OrderCapExceeded(f"explicit tables capped at order {FULL_TABLE_CAP}")
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NonAssociativeTable(f"({a}*{b})*{c} != {a}*({b}*{c})")
    return FiniteGroup(order=n, mul=rows, identity=ident, name=name)


def load_group(path: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    with open(path) as fh:
        return parse_group(fh.read(), order_cap)


# -- automorphisms -------------------------------------------------------------


class AutGroup:
    """A group of automorphisms, each stored as a permutation of element
    indices.  Closed under composition and inverse by construction."""

    def __init__(self, group: FiniteGroup, maps: list[tuple[int, ...]]):
        self.group = group
        self.maps = sorted(set(maps))
        self._index = {m: i for i, m in enumerate(self.maps)}

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __contains__(self, m: tuple[int, ...]) -> bool:
        return m in self._index

    def identity_map(self) -> tuple[int, ...]:
        return tuple(range(self.group.order))

    def aut_class(self, C: ConjClass) -> "AutGroup":
        """Subgroup taking the class C to itself setwise."""
        members = set(C.members)
        keep = [m for m in self.maps if {m[x] for x in members} == members]
        return AutGroup(self.group, keep)

    def aut_point(self, c: int) -> "AutGroup":
        """Subgroup fixing the element c."""
        return AutGroup(self.group, [m for m in self.maps if m[c] == c])

    def compose(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        """a after b."""
        return tuple(a[x] for x in b)

    def invert(self, a: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(a)
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)

    def derived_subgroup(self) -> set[tuple[int, ...]]:
        """Commutator subgroup, by closure of generator commutators."""
        comms = {
            self.compose(self.compose(a, b), self.invert(self.compose(b, a)))
            for a in self.maps
            for b in self.maps
        }
        closed = set(comms)
        closed.add(self.identity_map())
        frontier = list(closed)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(closed):
                    p = self.compose(a, b)
                    if p not in closed:
                        closed.add(p)
                        nxt.append(p)
            frontier = nxt
        return closed


def _generating_set(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    have = frozenset({G.identity})
    for g in range(G.order):
        if g not in have:
            gens.append(g)
            have = G.closure(gens)
            if len(have) == G.order:
                break
    return gens


def automorphism_group(G: FiniteGroup, cap: int = DEFAULT_AUT_CAP) -> AutGroup:
    """All automorphisms of G, by backtracking over images of a generating
    set.  Candidate images must match element order and class size; partial
    maps are closed under products as they grow, with early conflict pruning.
    """
    if G.order > cap:
        raise AutCapExceeded(f"automorphism search capped at order {cap}")
    gens = _generating_set(G)
    classes = G.conjugacy_classes()
    sig = [
        (G.element_order(g), len(G.class_of(g)))
        for g in range(G.order)
    ]
    candidates = [
        [h for h in range(G.order) if sig[h] == sig[g]] for g in gens
    ]

    mul = G.mul
    found: list[tuple[int, ...]] = []

    def extend(phi: dict[int, int], used: set[int], g: int, h: int):
        """Add phi[g] = h and close under products; return newly mapped keys
        or None on conflict."""
        added = []
        queue = [(g, h)]
        while queue:
            a, b = queue.pop()
            cur = phi.get(a)
            if cur is not None:
                if cur != b:
                    for k in added:
                        used.discard(phi.pop(k))
                    return None
                continue
            if b in used or sig[a] != sig[b]:
                for k in added:
                    used.discard(phi.pop(k))
                return None
            phi[a] = b
            used.add(b)
            added.append(a)
            for x, y in list(phi.items()):
                queue.append((mul[a][x], mul[b][y]))
                queue.append((mul[x][a], mul[y][b]))
        return added

    def backtrack(i: int, phi: dict[int, int], used: set[int]):
        if i == len(gens):
            if len(phi) == G.order:
                found.append(tuple(phi[x] for x in range(G.order)))
            return
        g = gens[i]
        if g in phi:
            backtrack(i + 1, phi, used)
            return
        for h in candidates[i]:
            added = extend(phi, used, g, h)
            if added is None:
                continue
            backtrack(i + 1, phi, used)
            for k in added:
                used.discard(phi.pop(k))

    backtrack(0, {G.identity: G.identity}, {G.identity})
    return AutGroup(G, found)
