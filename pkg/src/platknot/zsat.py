"""The circuit-to-knot reduction: alphabets, gate gadgets, compilation.

The alphabet attached to (G, C, c, k) consists of the zombie symbol
(c, c^-1, ..., c, c^-1) together with every surjective trivial-product
trivial-Schur-invariant tuple on the canonical sign layout whose first entry
is c and whose last entry is c^-1.  The initial subalphabet pairs positions
(1,2), (3,4), ... as inverses (exactly the bottom-cap condition), the final
subalphabet pairs (2,3), (4,5), ...; the wrap-around constraints a plat
imposes across symbols reduce to c = c by the endpoint normalization.

A gate gadget is a pure braid on 4k strands; its required behaviour (realize
a Rubik-group permutation of alphabet pairs, leave everything smaller alone)
is validated here, exhaustively when the state spaces fit the budget and by
documented random sampling otherwise.  Compilation replaces each circuit wire
by 2k parallel strands, each gate by its gadget braid, and closes the result
with plats; the count of circuit solutions, the Wirtinger count of the
compiled diagram pinned at the bottom-left meridian, and the plat transfer
count must then agree.
"""

from __future__ import annotations

import os
import re
import warnings
from dataclasses import dataclass, field
from itertools import product as iproduct
from random import Random

from .coloring import count_pinned, count_q, plat_transfer_count, QReport
from .diagrams import (
    BraidWord,
    KnotDiagram,
    PlatPairing,
    PlatTrace,
    component_count,
    trace_plat,
)
from .errors import (
    ActionMismatch,
    CorruptExtension,
    DivisibilityViolation,
    EnumerationBudgetExceeded,
    MalformedRecord,
    NotSimpleGroup,
    StrandMismatch,
    UnknownGadget,
)
from .extensions import ReducedMultiplier
from .groups import AutGroup, ConjClass, FiniteGroup, automorphism_group
from .hurwitz import (
    MonodromyTuple,
    _apply_letters,
    canonical_signs,
    schur,
    zombie,
)
from .rubik import USet, RubikReport, rubik_report

DEFAULT_ENUM_BUDGET = 2_000_000
DEFAULT_SAMPLES = 200


@dataclass
class ZsatAlphabet:
    k: int
    G: FiniteGroup
    C: ConjClass
    c: int
    rm: ReducedMultiplier
    symbols: list[MonodromyTuple]          # index 0 is the zombie
    index: dict[MonodromyTuple, int]
    initial: tuple[int, ...]               # I, as symbol indices
    final: tuple[int, ...]                 # F
    aut_full: AutGroup                     # Aut(G)
    aut_class: AutGroup                    # Aut(G, C)
    U: AutGroup                            # Aut(G, c)
    u_action: list[list[int]]              # per element of U: symbol -> symbol
    degenerate: bool

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def zombie_index(self) -> int:
        return 0

    @property
    def proper_initial(self) -> bool:
        return 1 < len(self.initial) < self.size

    @property
    def proper_final(self) -> bool:
        return 1 < len(self.final) < self.size


def build_alphabet(
    G: FiniteGroup,
    C: ConjClass,
    c: int,
    k: int,
    rm: ReducedMultiplier,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> ZsatAlphabet:
    """Enumerate the alphabet exhaustively; warns when only the zombie
    survives (k too small for a meaningful instance)."""
    if not G.is_simple():
        raise NotSimpleGroup(f"group {G.name!r} is not nonabelian simple")
    if c not in set(C.members):
        raise CorruptExtension("pinned element is not in the class")
    if rm.parent.base is not G or rm.base_class.representative != C.representative:
        raise CorruptExtension("reduced multiplier was built for a different (G, C)")

    mul, inv = G.mul, G.inv
    qident = rm.quotient.cover.identity
    signs = canonical_signs(k)
    n = 2 * k
    cands: list[tuple[int, ...]] = []
    if k == 1:
        pass  # entries are forced to (c, c^-1): the zombie itself
    else:
        domains = [C.members if i % 2 == 0 else C.inverse_members() for i in range(n)]
        free = range(1, n - 2)
        width = 1
        for i in free:
            width *= len(domains[i])
        if width > budget:
            raise EnumerationBudgetExceeded(
                f"alphabet enumeration needs {width} candidates, budget {budget}"
            )
        last = inv[c]
        solved_domain = set(domains[n - 2])
        for mid in iproduct(*(domains[i] for i in free)):
            acc = c
            for m in mid:
                acc = mul[acc][m]
            solved = mul[inv[acc]][c]
            if solved not in solved_domain:
                continue
            elems = (c, *mid, solved, last)
            if len(G.closure(elems)) != G.order:
                continue
            if schur(MonodromyTuple(signs, elems), rm) != qident:
                continue
            cands.append(elems)

    z = zombie(k, G, c)
    symbols = [z] + [MonodromyTuple(signs, e) for e in sorted(set(cands))]
    index = {t: i for i, t in enumerate(symbols)}

    def in_initial(t: MonodromyTuple) -> bool:
        return all(t.elems[2 * i + 1] == inv[t.elems[2 * i]] for i in range(k))

    def in_final(t: MonodromyTuple) -> bool:
        return all(t.elems[2 * i] == inv[t.elems[2 * i - 1]] for i in range(1, k))

    initial = tuple(i for i, t in enumerate(symbols) if in_initial(t))
    final = tuple(i for i, t in enumerate(symbols) if in_final(t))
    assert 0 in initial and 0 in final, "zombie must lie in both subalphabets"

    aut_full = automorphism_group(G)
    aut_cls = aut_full.aut_class(C)
    U = aut_full.aut_point(c)
    u_action = []
    for u in U.maps:
        row = []
        for t in symbols:
            img = MonodromyTuple(t.signs, tuple(u[m] for m in t.elems))
            j = index.get(img)
            if j is None:
                raise CorruptExtension("alphabet is not invariant under Aut(G,c)")
            row.append(j)
        u_action.append(row)
    iset, fset = set(initial), set(final)
    for row in u_action:
        if {row[i] for i in iset} != iset or {row[i] for i in fset} != fset:
            raise CorruptExtension("subalphabets are not invariant under Aut(G,c)")

    degenerate = len(symbols) == 1
    if degenerate:
        warnings.warn(f"alphabet for k={k} is only the zombie; k is too small")
    return ZsatAlphabet(
        k=k,
        G=G,
        C=C,
        c=c,
        rm=rm,
        symbols=symbols,
        index=index,
        initial=initial,
        final=final,
        aut_full=aut_full,
        aut_class=aut_cls,
        U=U,
        u_action=u_action,
        degenerate=degenerate,
    )


# -- gadgets ---------------------------------------------------------------------


@dataclass
class PropertyCheck:
    ok: bool
    regime: str                  # 'exhaustive' | 'sampled:<n>' | 'structural'
    detail: str = ""


@dataclass
class GadgetReport:
    maps_alphabet: PropertyCheck           # Rubik property 1
    rubik: RubikReport | None
    trivial_outside: PropertyCheck         # property 2
    smaller_trivial: list[tuple[str, PropertyCheck]]   # property 3
    pure: PropertyCheck                    # property 4

    @property
    def all_ok(self) -> bool:
        return (
            self.maps_alphabet.ok
            and (self.rubik is None or self.rubik.is_member)
            and self.trivial_outside.ok
            and all(pc.ok for _, pc in self.smaller_trivial)
            and self.pure.ok
        )


@dataclass
class GateGadget:
    name: str
    braid: BraidWord
    action: list[int]                      # permutation of A^2 pair indices
    report: GadgetReport | None = None


def _pair_state(alph: ZsatAlphabet, i: int, j: int) -> tuple[list[int], list[int]]:
    a, b = alph.symbols[i], alph.symbols[j]
    return list(a.signs) + list(b.signs), list(a.elems) + list(b.elems)


def gadget_action(word: BraidWord, alph: ZsatAlphabet) -> list[int]:
    """Apply the braid to every alphabet pair; fails if any image leaves the
    alphabet (the gadget then cannot implement a gate)."""
    k, G = alph.k, alph.G
    if word.strands != 4 * k:
        raise StrandMismatch(f"gate gadgets act on 4k = {4 * k} strands")
    nA = alph.size
    mul, inv = G.mul, G.inv
    half = canonical_signs(k)
    action = [0] * (nA * nA)
    for i in range(nA):
        for j in range(nA):
            sg, el = _pair_state(alph, i, j)
            _apply_letters(sg, el, word.letters, mul, inv)
            left = MonodromyTuple(tuple(sg[: 2 * k]), tuple(el[: 2 * k]))
            right = MonodromyTuple(tuple(sg[2 * k :]), tuple(el[2 * k :]))
            i2 = alph.index.get(left) if left.signs == half else None
            j2 = alph.index.get(right) if right.signs == half else None
            if i2 is None or j2 is None:
                raise ActionMismatch(
                    f"braid maps alphabet pair ({i},{j}) outside the alphabet"
                )
            action[i * nA + j] = i2 * nA + j2
    return action


def _sample_r0_state(alph: ZsatAlphabet, rng: Random) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """One random canonical-sign surjective trivial-product trivial-sch state
    on 4k strands, or None when the draw misses the stratum."""
    G, C, k = alph.G, alph.C, alph.k
    n = 4 * k
    mul, inv = G.mul, G.inv
    cp, cm = C.members, C.inverse_members()
    elems = []
    acc = G.identity
    for i in range(n - 1):
        m = rng.choice(cp if i % 2 == 0 else cm)
        elems.append(m)
        acc = mul[acc][m]
    lastv = inv[acc]
    if lastv not in set(cm):
        return None
    elems.append(lastv)
    if len(G.closure(elems)) != G.order:
        return None
    signs = canonical_signs(2 * k)
    t = MonodromyTuple(signs, tuple(elems))
    if schur(t, alph.rm) != alph.rm.quotient.cover.identity:
        return None
    return signs, tuple(elems)


def validate_gadget(
    word: BraidWord,
    alph: ZsatAlphabet,
    smaller_pairs: list[tuple[FiniteGroup, ConjClass]] = (),
    name: str = "gadget",
    budget: int = DEFAULT_ENUM_BUDGET,
    samples: int = DEFAULT_SAMPLES,
    rng: Random | None = None,
) -> GateGadget:
    """Check the four gate-gadget properties.  Properties 2 and 3 are checked
    exhaustively when their state spaces fit the budget, otherwise on random
    samples; the report records which regime applied, so a gadget can be
    accepted with sampled evidence and the caller knows it."""
    rng = rng or Random(0)
    G, C, k = alph.G, alph.C, alph.k
    mul, inv = G.mul, G.inv
    n = 4 * k

    pure_ok = word.permutation() == tuple(range(word.strands))
    pure = PropertyCheck(pure_ok, "structural", "strand permutation is trivial" if pure_ok else "braid permutes strands")

    try:
        action = gadget_action(word, alph)
        maps_alphabet = PropertyCheck(True, "exhaustive", f"{alph.size}^2 pairs closed")
    except ActionMismatch as err:
        action = None
        maps_alphabet = PropertyCheck(False, "exhaustive", str(err))

    rub: RubikReport | None = None
    if action is not None:
        nA = alph.size
        states = [(i, j) for i in range(nA) for j in range(nA)]
        u_sym = {u: row for u, row in zip(alph.U.maps, alph.u_action)}
        uset = USet.build(alph.U, states, lambda u, s: (u_sym[u][s[0]], u_sym[u][s[1]]))
        rub = rubik_report(uset, action, expected_fixed=(0, 0))

    # property 2: identity action on the surjective trivial-sch stratum away
    # from the class-preserving saturation of the alphabet pairs
    sat: set[tuple[int, ...]] = set()
    for u in alph.aut_class.maps:
        for i in range(alph.size):
            for j in range(alph.size):
                _, el = _pair_state(alph, i, j)
                sat.add(tuple(u[m] for m in el))
    checked = failures = 0
    exhaustive2 = len(C) ** (n - 1) <= budget
    if exhaustive2:
        from .hurwitz import enumerate_rhat_slice

        signs = canonical_signs(2 * k)
        qident = alph.rm.quotient.cover.identity
        for elems in enumerate_rhat_slice(2 * k, G, C):
            if elems in sat:
                continue
            if len(G.closure(elems)) != G.order:
                continue
            if schur(MonodromyTuple(signs, elems), alph.rm) != qident:
                continue
            sg, el = list(signs), list(elems)
            _apply_letters(sg, el, word.letters, mul, inv)
            checked += 1
            if tuple(el) != elems:
                failures += 1
        regime2 = "exhaustive"
    else:
        tries = 0
        while checked < samples and tries < 50 * samples:
            tries += 1
            drawn = _sample_r0_state(alph, rng)
            if drawn is None or drawn[1] in sat:
                continue
            sg, el = list(drawn[0]), list(drawn[1])
            _apply_letters(sg, el, word.letters, mul, inv)
            checked += 1
            if tuple(el) != drawn[1]:
                failures += 1
        regime2 = f"sampled:{checked}"
    trivial_outside = PropertyCheck(
        failures == 0, regime2, f"{failures}/{checked} moved states"
    )

    # property 3: identity action on every smaller class-tuple space
    smaller_reports: list[tuple[str, PropertyCheck]] = []
    for J, E in smaller_pairs:
        jmul, jinv = J.mul, J.inv
        ep, em = E.members, E.inverse_members()
        total = len(E) ** n
        ch = fl = 0
        if total <= budget:
            for elems in iproduct(*(ep if i % 2 == 0 else em for i in range(n))):
                sg = list(canonical_signs(2 * k))
                el = list(elems)
                _apply_letters(sg, el, word.letters, jmul, jinv)
                ch += 1
                if tuple(el) != elems:
                    fl += 1
            regime3 = "exhaustive"
        else:
            for _ in range(samples):
                elems = tuple(
                    rng.choice(ep if i % 2 == 0 else em) for i in range(n)
                )
                sg = list(canonical_signs(2 * k))
                el = list(elems)
                _apply_letters(sg, el, word.letters, jmul, jinv)
                ch += 1
                if tuple(el) != elems:
                    fl += 1
            regime3 = f"sampled:{ch}"
        smaller_reports.append(
            (
                f"{J.name}:{E.label}",
                PropertyCheck(fl == 0, regime3, f"{fl}/{ch} moved states"),
            )
        )

    report = GadgetReport(
        maps_alphabet=maps_alphabet,
        rubik=rub,
        trivial_outside=trivial_outside,
        smaller_trivial=smaller_reports,
        pure=pure,
    )
    return GateGadget(name=name, braid=word, action=action or [], report=report)


# -- circuits --------------------------------------------------------------------


@dataclass(frozen=True)
class ZsatCircuit:
    width: int
    gates: tuple[tuple[str, int], ...] = ()   # (gadget name, wire position i), acting on wires (i, i+1)

    def __post_init__(self):
        if self.width < 1:
            raise MalformedRecord("circuit width must be positive")
        for name, pos in self.gates:
            if not 1 <= pos <= self.width - 1:
                raise MalformedRecord(
                    f"gate {name!r} at {pos} not adjacent within width {self.width}"
                )


@dataclass
class CircuitFile:
    circuit: ZsatCircuit
    k: int
    group_path: str
    class_spec: str
    pin_spec: str | None
    extension_path: str | None


def parse_circuit(text: str, base_dir: str = ".") -> CircuitFile:
    """Parse ``zsat width <n> k <k> group <file> class <rep> [pin <c>]``
    plus optional ``extension <file>`` and ``gate <name> at <i>`` lines."""
    width = k = None
    group_path = class_spec = pin_spec = extension_path = None
    gates: list[tuple[str, int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("zsat"):
            m = re.match(
                r"^zsat\s+width\s+(\d+)\s+k\s+(\d+)\s+group\s+(\S+)\s+class\s+(\S+)(?:\s+pin\s+(\S+))?$",
                line,
            )
            if not m:
                raise MalformedRecord(f"bad zsat header {line!r}")
            width, k = int(m.group(1)), int(m.group(2))
            group_path, class_spec, pin_spec = m.group(3), m.group(4), m.group(5)
        elif line.startswith("extension"):
            extension_path = line.split()[1]
        elif line.startswith("gate"):
            m = re.match(r"^gate\s+(\S+)\s+at\s+(\d+)$", line)
            if not m:
                raise MalformedRecord(f"bad gate line {line!r}")
            gates.append((m.group(1), int(m.group(2))))
        else:
            raise MalformedRecord(f"unrecognized circuit line {line!r}")
    if width is None:
        raise MalformedRecord("circuit file has no zsat header")

    def rel(p):
        return p if p is None or os.path.isabs(p) else os.path.join(base_dir, p)

    return CircuitFile(
        circuit=ZsatCircuit(width, tuple(gates)),
        k=k,
        group_path=rel(group_path),
        class_spec=class_spec,
        pin_spec=pin_spec,
        extension_path=rel(extension_path),
    )


@dataclass
class GadgetFile:
    name: str
    braid: BraidWord
    action_rows: tuple[tuple[int, int], ...] | None = None


def parse_gadget(text: str) -> GadgetFile:
    name = None
    strands = None
    letters: list[int] = []
    rows: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gadget"):
            m = re.match(r"^gadget\s+(\S+)\s+strands\s+(\d+)$", line)
            if not m:
                raise MalformedRecord(f"bad gadget header {line!r}")
            name, strands = m.group(1), int(m.group(2))
        elif line.startswith("word"):
            letters.extend(int(t) for t in line.split()[1:])
        elif line.startswith("action"):
            toks = line.split()
            rows.append((int(toks[1]), int(toks[2])))
        else:
            raise MalformedRecord(f"unrecognized gadget line {line!r}")
    if name is None:
        raise MalformedRecord("gadget file has no header")
    return GadgetFile(
        name=name,
        braid=BraidWord(strands, tuple(letters)),
        action_rows=tuple(rows) if rows else None,
    )


def load_registry(path: str) -> dict[str, GadgetFile]:
    registry: dict[str, GadgetFile] = {}
    if os.path.isdir(path):
        names = sorted(f for f in os.listdir(path) if f.endswith(".gad"))
        files = [os.path.join(path, f) for f in names]
    else:
        files = [path]
    for f in files:
        with open(f) as fh:
            g = parse_gadget(fh.read())
        registry[g.name] = g
    return registry


def registry_actions(
    registry: dict[str, GadgetFile], alph: ZsatAlphabet, needed: set[str]
) -> dict[str, GateGadget]:
    """Compute braid actions for the needed gadgets, checking any declared
    action rows against the computed permutation."""
    out: dict[str, GateGadget] = {}
    for name in sorted(needed):
        gf = registry.get(name)
        if gf is None:
            raise UnknownGadget(f"no gadget {name!r} in the registry")
        action = gadget_action(gf.braid, alph)
        if gf.action_rows:
            nA = alph.size
            for frm, to in gf.action_rows:
                if not (0 <= frm < nA * nA) or action[frm] != to:
                    raise ActionMismatch(
                        f"gadget {name!r} declares action {frm}->{to}, braid gives {action[frm] if 0 <= frm < nA * nA else '?'}"
                    )
        out[name] = GateGadget(name=name, braid=gf.braid, action=action)
    return out


@dataclass
class ZsatCount:
    count: int
    nontrivial_orbit_count: int
    u_order: int


def count_zsat(
    Z: ZsatCircuit, alph: ZsatAlphabet, registry: dict[str, GadgetFile]
) -> ZsatCount:
    """Exact solution count: words over the initial subalphabet whose image
    under the gate actions lands in the final subalphabet.  The all-zombie
    word is always a solution; the c-fixing automorphisms act freely on the
    rest, and the orbit count is reported."""
    gadgets = registry_actions(registry, alph, {name for name, _ in Z.gates})
    nA = alph.size
    fset = set(alph.final)
    count = 0
    for x in iproduct(alph.initial, repeat=Z.width):
        state = list(x)
        for name, pos in Z.gates:
            a, b = state[pos - 1], state[pos]
            a2, b2 = divmod(gadgets[name].action[a * nA + b], nA)
            state[pos - 1], state[pos] = a2, b2
        if all(sym in fset for sym in state):
            count += 1
    if (count - 1) % len(alph.U):
        raise DivisibilityViolation(
            f"{count - 1} nontrivial solutions not divisible by |U| = {len(alph.U)}"
        )
    return ZsatCount(
        count=count,
        nontrivial_orbit_count=(count - 1) // len(alph.U),
        u_order=len(alph.U),
    )


# -- compilation -------------------------------------------------------------------


@dataclass
class CompileResult:
    braid: BraidWord
    pairing: PlatPairing
    diagram: KnotDiagram
    meridian: int
    trace: PlatTrace
    crossing_count: int


def compile_circuit(
    Z: ZsatCircuit, alph: ZsatAlphabet, registry: dict[str, GadgetFile]
) -> CompileResult:
    """Replace each wire by 2k parallel strands and each gate by its gadget
    braid, then close with plats: bottom caps pair (2i-1, 2i) inside each
    symbol; top caps pair (2i, 2i+1) inside symbols, adjacent symbols across
    their shared boundary, and the first and last puncture around the
    outside.  The bottom-left arc is the designated meridian."""
    k, n = alph.k, Z.width
    strands = 2 * k * n
    letters: list[int] = []
    for name, pos in Z.gates:
        gf = registry.get(name)
        if gf is None:
            raise UnknownGadget(f"no gadget {name!r} in the registry")
        if gf.braid.strands != 4 * k:
            raise StrandMismatch(
                f"gadget {name!r} has {gf.braid.strands} strands, need {4 * k}"
            )
        off = 2 * k * (pos - 1)
        for x in gf.braid.letters:
            letters.append(x + off if x > 0 else x - off)
    braid = BraidWord(strands, tuple(letters))

    bottom = tuple((i, i + 1) for i in range(1, strands, 2))
    top: list[tuple[int, int]] = []
    for i in range(n):
        off = 2 * k * i
        for j in range(1, k):
            top.append((off + 2 * j, off + 2 * j + 1))
    for i in range(1, n):
        top.append((2 * k * i, 2 * k * i + 1))
    top.append((1, strands) if strands > 1 else (1, 2))
    pairing = PlatPairing(bottom, tuple(top))

    trace = trace_plat(braid, pairing)
    return CompileResult(
        braid=braid,
        pairing=pairing,
        diagram=trace.diagram,
        meridian=trace.bottom_arcs[0],
        trace=trace,
        crossing_count=len(trace.diagram.crossings),
    )


@dataclass
class SmallerPairResult:
    label: str
    q_report: QReport

    @property
    def q_is_zero(self) -> bool:
        return self.q_report.q == 0


@dataclass
class VerifyReport:
    zsat: ZsatCount
    wirtinger_pinned: int
    transfer_pinned: int
    components: int
    crossing_count: int
    smaller: list[SmallerPairResult]
    gadget_reports: dict[str, GadgetReport]

    @property
    def three_way_equal(self) -> bool:
        return self.zsat.count == self.wirtinger_pinned == self.transfer_pinned

    @property
    def all_smaller_zero(self) -> bool:
        return all(r.q_is_zero for r in self.smaller)


def verify_reduction(
    Z: ZsatCircuit,
    alph: ZsatAlphabet,
    registry: dict[str, GadgetFile],
    smaller_pairs: list[tuple[FiniteGroup, ConjClass]] = (),
    validate_gadgets: bool = True,
    rng: Random | None = None,
) -> VerifyReport:
    """Count circuit solutions, then recount them two independent ways on the
    compiled diagram.  Mismatches are findings in the report, not errors: a
    sampled gadget property that failed globally shows up here."""
    zc = count_zsat(Z, alph, registry)
    comp = compile_circuit(Z, alph, registry)
    G, C, c = alph.G, alph.C, alph.c
    wirt = count_pinned(comp.diagram, comp.meridian, G, c, C=C.members)
    trans = plat_transfer_count(comp.braid, comp.pairing, G, C, pin=(1, c))
    smaller = [
        SmallerPairResult(
            label=f"{J.name}:{E.label}",
            q_report=count_q(comp.diagram, J, E, pin_arc=comp.meridian),
        )
        for J, E in smaller_pairs
    ]
    reports: dict[str, GadgetReport] = {}
    if validate_gadgets:
        for name in sorted({name for name, _ in Z.gates}):
            gg = validate_gadget(
                registry[name].braid, alph, smaller_pairs, name=name, rng=rng
            )
            reports[name] = gg.report
    return VerifyReport(
        zsat=zc,
        wirtinger_pinned=wirt,
        transfer_pinned=trans,
        components=component_count(comp.diagram),
        crossing_count=comp.crossing_count,
        smaller=smaller,
        gadget_reports=reports,
    )
