"""Oriented knot and link diagrams, braid words, and plat closures.

Diagram format
--------------
A diagram is a list of signed crossings plus optional crossing-free circles.
Each crossing stores ``(sign, over, under_in, under_out)`` where the three
slots are arc ids; ``under_in``/``under_out`` follow the under-strand's
orientation.  The conjugation relation attached to a crossing is

* positive:  under_out = over^-1 * under_in * over
* negative:  under_out = over * under_in * over^-1

Crossing signs follow the right-hand (determinant) rule on the oriented
strands.  The text form is line-oriented: ``X+[o,ui,uo]``, ``X-[o,ui,uo]``,
and ``O[a]`` for a crossing-free circle.

Braids and plats
----------------
Braids are drawn bottom to top with strand positions 1..s.  A positive letter
``i`` crosses the strand at position i OVER the strand at position i+1; a
negative letter crosses it under.  A plat closure caps the braid below and
above with non-crossing perfect matchings.  Component orientations are
canonical: each component is oriented so that its strand at the component's
smallest bottom position points downward.  With that choice a braid letter
between equally-oriented strands keeps its sign (positive letter, positive
crossing) and flips it between opposite strands.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import (
    CrossingMatching,
    DanglingArc,
    DisconnectedDiagram,
    MalformedRecord,
    StrandMismatch,
)

UP = 1
DOWN = -1


class Crossing(NamedTuple):
    sign: int
    over: int
    under_in: int
    under_out: int


@dataclass(frozen=True)
class KnotDiagram:
    """A validated oriented diagram: signed crossings plus free circles."""

    crossings: tuple[Crossing, ...]
    circles: tuple[int, ...] = ()

    def __post_init__(self):
        ins: dict[int, int] = {}
        outs: dict[int, int] = {}
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise MalformedRecord(f"bad crossing sign {c.sign}")
            ins[c.under_in] = ins.get(c.under_in, 0) + 1
            outs[c.under_out] = outs.get(c.under_out, 0) + 1
        circles = set(self.circles)
        if len(circles) != len(self.circles):
            raise MalformedRecord("duplicate circle declaration")
        cut_arcs = set(ins) | set(outs)
        for a in cut_arcs:
            if a in circles:
                raise MalformedRecord(f"arc {a} is both a circle and cut")
            if ins.get(a, 0) != 1 or outs.get(a, 0) != 1:
                raise DanglingArc(
                    f"arc {a} enters {ins.get(a, 0)} and leaves {outs.get(a, 0)} underpasses"
                )
        known = cut_arcs | circles
        for c in self.crossings:
            if c.over not in known:
                raise DanglingArc(f"over-arc {c.over} never appears as a full arc")

    @property
    def arcs(self) -> tuple[int, ...]:
        seen: set[int] = set(self.circles)
        for c in self.crossings:
            seen.update((c.over, c.under_in, c.under_out))
        return tuple(sorted(seen))

    def is_connected(self) -> bool:
        arcs = self.arcs
        if not arcs:
            return True
        parent = {a: a for a in arcs}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int):
            parent[find(a)] = find(b)

        for c in self.crossings:
            union(c.over, c.under_in)
            union(c.under_in, c.under_out)
        return len({find(a) for a in arcs}) == 1


def component_count(d: KnotDiagram) -> int:
    """Number of link components, by following arcs through underpasses."""
    arcs = d.arcs
    parent = {a: a for a in arcs}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        parent[find(c.under_in)] = find(c.under_out)
    return len({find(a) for a in arcs})


_X_RE = re.compile(r"^X([+-])\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]$")
_O_RE = re.compile(r"^O\[\s*(\d+)\s*\]$")


def parse_pd(text: str, require_connected: bool = True) -> KnotDiagram:
    """Parse diagram text.  Raises on malformed records, dangling arcs, and
    (by default) disconnected diagrams, which usually indicate input typos."""
    crossings: list[Crossing] = []
    circles: list[int] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("meridian"):
            continue
        m = _X_RE.match(line)
        if m:
            sign = 1 if m.group(1) == "+" else -1
            crossings.append(
                Crossing(sign, int(m.group(2)), int(m.group(3)), int(m.group(4)))
            )
            continue
        m = _O_RE.match(line)
        if m:
            circles.append(int(m.group(1)))
            continue
        raise MalformedRecord(f"unrecognized diagram line {line!r}")
    d = KnotDiagram(tuple(crossings), tuple(circles))
    if require_connected and not d.is_connected():
        raise DisconnectedDiagram("diagram splits into non-interacting pieces")
    return d


def serialize(d: KnotDiagram) -> str:
    """Canonical text form: arcs renumbered 1.. in order of first appearance,
    crossings in stored order."""
    renum: dict[int, int] = {}

    def r(a: int) -> int:
        if a not in renum:
            renum[a] = len(renum) + 1
        return renum[a]

    lines = []
    for c in d.crossings:
        lines.append(
            f"X{'+' if c.sign > 0 else '-'}[{r(c.over)},{r(c.under_in)},{r(c.under_out)}]"
        )
    for a in d.circles:
        lines.append(f"O[{r(a)}]")
    return "\n".join(lines) + "\n"


def load_diagram(path: str, require_connected: bool = True) -> tuple[KnotDiagram, int | None]:
    """Load a diagram file; returns the diagram and the optional ``meridian``
    footer arc."""
    with open(path) as fh:
        text = fh.read()
    meridian = None
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line.startswith("meridian"):
            meridian = int(line.split()[1])
    return parse_pd(text, require_connected), meridian


def convert_pd4(quads: Iterable[tuple[int, int, int, int]]) -> KnotDiagram:
    """Convert classical 4-tuple PD codes X(a,b,c,d) (edges listed
    counterclockwise from the incoming under-edge) to the explicit format.
    Edge numbering must increase along the strand; ambiguous over-strand
    orientation is a hard error."""
    quads = list(quads)
    edges = {e for q in quads for e in q}
    n = max(edges)
    parent = {e: e for e in edges}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    signs = []
    for a, b, c, d in quads:
        if b == d % n + 1:
            signs.append(1)      # over strand runs d -> b
        elif d == b % n + 1:
            signs.append(-1)     # over strand runs b -> d
        else:
            raise MalformedRecord(
                f"cannot orient over strand of X({a},{b},{c},{d})"
            )
        parent[find(b)] = find(d)
    arc = {e: find(e) for e in edges}
    crossings = [
        Crossing(s, arc[b], arc[a], arc[c]) for s, (a, b, c, d) in zip(signs, quads)
    ]
    return KnotDiagram(tuple(crossings))


# -- braids and plats ----------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise StrandMismatch("braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise StrandMismatch(f"letter {x} out of range for {self.strands} strands")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """Bottom position -> top position (0-based)."""
        occ = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            occ[i], occ[i + 1] = occ[i + 1], occ[i]
        perm = [0] * self.strands
        for pos, strand in enumerate(occ):
            perm[strand] = pos
        return tuple(perm)

    def __str__(self) -> str:
        return f"braid {self.strands}: " + " ".join(str(x) for x in self.letters)


def parse_braid(text: str) -> BraidWord:
    line = next(
        (ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")),
        "",
    )
    m = re.match(r"^braid\s+(\d+)\s*:\s*(.*)$", line)
    if not m:
        raise MalformedRecord(f"bad braid line {line!r}")
    letters = tuple(int(tok) for tok in m.group(2).split())
    return BraidWord(int(m.group(1)), letters)


@dataclass(frozen=True)
class PlatPairing:
    """Non-crossing perfect matchings of the bottom and top endpoints 1..s."""

    bottom: tuple[tuple[int, int], ...]
    top: tuple[tuple[int, int], ...]

    def __post_init__(self):
        s = 2 * len(self.bottom)
        if len(self.top) != len(self.bottom):
            raise CrossingMatching("top and bottom pair different strand counts")
        for name, pairs in (("bottom", self.bottom), ("top", self.top)):
            flat = [p for pair in pairs for p in pair]
            if sorted(flat) != list(range(1, s + 1)):
                raise CrossingMatching(f"{name} is not a perfect matching of 1..{s}")
            norm = sorted((min(a, b), max(a, b)) for a, b in pairs)
            for i, (a, b) in enumerate(norm):
                for c, d in norm[i + 1 :]:
                    if a < c < b < d:
                        raise CrossingMatching(
                            f"{name} pairs ({a},{b}) and ({c},{d}) cross"
                        )

    @property
    def strands(self) -> int:
        return 2 * len(self.bottom)


def adjacent_pairing(s: int) -> PlatPairing:
    caps = tuple((i, i + 1) for i in range(1, s, 2))
    return PlatPairing(caps, caps)


def parse_plat(text: str) -> PlatPairing:
    found = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^(bottom|top)\s*:\s*(.*)$", line)
        if not m:
            raise MalformedRecord(f"bad plat line {line!r}")
        pairs = []
        for body in re.findall(r"\(([^()]*)\)", m.group(2)):
            pts = [int(t) for t in body.replace(",", " ").split()]
            if len(pts) != 2:
                raise MalformedRecord(f"plat cap {body!r} is not a pair")
            pairs.append((pts[0], pts[1]))
        found[m.group(1)] = tuple(pairs)
    if set(found) != {"bottom", "top"}:
        raise MalformedRecord("plat file needs one bottom: and one top: line")
    return PlatPairing(found["bottom"], found["top"])


@dataclass
class PlatTrace:
    """Everything the coloring engines need to know about a plat closure."""

    diagram: KnotDiagram
    bottom_arcs: tuple[int, ...]       # arc at each bottom position (post-merge)
    bottom_dirs: tuple[int, ...]       # UP/DOWN at each bottom position
    top_dirs: tuple[int, ...]          # UP/DOWN at each top position
    n_components: int


def strand_directions(b: BraidWord, p: PlatPairing) -> tuple[list[int], int]:
    """Orient every strand; returns direction (UP = traversed bottom-to-top)
    per bottom position, and the component count."""
    s = b.strands
    perm = b.permutation()
    inv_perm = [0] * s
    for i, t in enumerate(perm):
        inv_perm[t] = i
    bot_partner = {}
    for a, c in p.bottom:
        bot_partner[a - 1] = c - 1
        bot_partner[c - 1] = a - 1
    top_partner = {}
    for a, c in p.top:
        top_partner[a - 1] = c - 1
        top_partner[c - 1] = a - 1

    dirs = [0] * s
    n_comp = 0
    for start in range(s):
        if dirs[start] != 0:
            continue
        n_comp += 1
        # the component's first-seen bottom position points down; follow the
        # component (bottom cap, strand up, top cap, strand down, ...) until
        # it closes
        dirs[start] = DOWN
        pos = start
        while True:
            q = bot_partner[pos]
            dirs[q] = UP
            t2 = top_partner[perm[q]]
            r = inv_perm[t2]
            if r == start:
                break
            dirs[r] = DOWN
            pos = r
    return dirs, n_comp


def trace_plat(b: BraidWord, p: PlatPairing) -> PlatTrace:
    """Build the diagram of the plat closure and record the data shared with
    the transfer-matrix counter."""
    s = b.strands
    if s != p.strands or s % 2 != 0:
        raise StrandMismatch(
            f"braid has {s} strands, pairing wants {p.strands}"
        )
    dirs, n_comp = strand_directions(b, p)

    # arcs are provisional ids, merged by top caps at the end
    next_arc = [0]

    def fresh() -> int:
        next_arc[0] += 1
        return next_arc[0]

    cur_arc = [0] * s
    for a, c in p.bottom:
        arc = fresh()
        cur_arc[a - 1] = arc
        cur_arc[c - 1] = arc
    cur_dir = list(dirs)
    bottom_arcs = tuple(cur_arc)
    bottom_dirs = tuple(cur_dir)

    crossings: list[list[int]] = []
    for x in b.letters:
        i = abs(x) - 1
        over_pos, under_pos = (i, i + 1) if x > 0 else (i + 1, i)
        over_arc = cur_arc[over_pos]
        lower = cur_arc[under_pos]
        upper = fresh()
        same_dir = cur_dir[i] == cur_dir[i + 1]
        sign = (1 if x > 0 else -1) * (1 if same_dir else -1)
        if cur_dir[under_pos] == UP:
            u_in, u_out = lower, upper
        else:
            u_in, u_out = upper, lower
        crossings.append([sign, over_arc, u_in, u_out])
        # strands swap positions; over keeps its arc, under continues as upper
        cur_arc[i], cur_arc[i + 1] = cur_arc[i + 1], cur_arc[i]
        cur_dir[i], cur_dir[i + 1] = cur_dir[i + 1], cur_dir[i]
        under_now = i if under_pos == i + 1 else i + 1
        cur_arc[under_now] = upper

    top_dirs = tuple(cur_dir)

    parent = list(range(next_arc[0] + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, c in p.top:
        ra, rc = find(cur_arc[a - 1]), find(cur_arc[c - 1])
        if ra != rc:
            parent[max(ra, rc)] = min(ra, rc)

    used_in_crossings: set[int] = set()
    final_crossings = []
    for sign, o, ui, uo in crossings:
        o, ui, uo = find(o), find(ui), find(uo)
        used_in_crossings.update((ui, uo))
        final_crossings.append(Crossing(sign, o, ui, uo))
    all_arcs = {find(a) for a in range(1, next_arc[0] + 1)}
    circles = tuple(sorted(a for a in all_arcs if a not in used_in_crossings))

    diagram = KnotDiagram(tuple(final_crossings), circles)
    return PlatTrace(
        diagram=diagram,
        bottom_arcs=tuple(find(a) for a in bottom_arcs),
        bottom_dirs=bottom_dirs,
        top_dirs=top_dirs,
        n_components=n_comp,
    )


def plat_closure(b: BraidWord, p: PlatPairing) -> KnotDiagram:
    """Cap the braid below and above with the given non-crossing matchings."""
    return trace_plat(b, p).diagram


# -- Wirtinger presentations ---------------------------------------------------


@dataclass(frozen=True)
class WirtingerPresentation:
    """One generator per arc, one conjugation relation per crossing."""

    generators: tuple[int, ...]
    relations: tuple[Crossing, ...]

    def relation_strings(self) -> list[str]:
        out = []
        for c in self.relations:
            o, ui, uo = f"x{c.over}", f"x{c.under_in}", f"x{c.under_out}"
            if c.sign > 0:
                out.append(f"{uo} = {o}^-1 {ui} {o}")
            else:
                out.append(f"{uo} = {o} {ui} {o}^-1")
        return out


def wirtinger(d: KnotDiagram) -> WirtingerPresentation:
    return WirtingerPresentation(generators=d.arcs, relations=d.crossings)
