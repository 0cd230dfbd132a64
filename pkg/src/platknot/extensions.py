"""Central extensions and the class-reduced multiplier.

A cover group, a base group, and a projection table are ingested from a data
file and validated (homomorphism, surjectivity, centrality of the kernel);
covers are never constructed here.  Given a generating class C of a perfect
base, ``reduced_multiplier`` collapses the part of the kernel that conjugates
lifts of C into each other, leaving the finest central quotient in which
distinct lifts of any c in C stay non-conjugate.  The quotient's kernel is the
multiplier attached to (G, C); the designated lifted class gives every c a
unique canonical lift.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BaseNotPerfect,
    CorruptExtension,
    LiftAmbiguity,
    MalformedGroupFile,
    NonCentralKernel,
    NotHomomorphism,
    NotSurjective,
)
from .groups import ConjClass, FiniteGroup, generates, parse_group


@dataclass
class CentralExtension:
    cover: FiniteGroup
    base: FiniteGroup
    proj: tuple[int, ...]
    kernel: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        cov, bas, proj = self.cover, self.base, self.proj
        if len(proj) != cov.order or any(not 0 <= p < bas.order for p in proj):
            raise NotHomomorphism("projection table has wrong shape")
        if set(proj) != set(range(bas.order)):
            raise NotSurjective("projection does not cover the base group")
        cmul, bmul = cov.mul, bas.mul
        for a in range(cov.order):
            ra, pa = cmul[a], proj[a]
            for b in range(cov.order):
                if proj[ra[b]] != bmul[pa][proj[b]]:
                    raise NotHomomorphism(f"proj({a}*{b}) != proj({a})*proj({b})")
        kernel = tuple(x for x in range(cov.order) if proj[x] == bas.identity)
        for m in kernel:
            rm = cmul[m]
            for x in range(cov.order):
                if rm[x] != cmul[x][m]:
                    raise NonCentralKernel(f"kernel element {m} is not central")
        self.kernel = kernel

    def fiber(self, g: int) -> list[int]:
        return [x for x in range(self.cover.order) if self.proj[x] == g]


def parse_extension(text: str) -> CentralExtension:
    """Parse an extension file: ``extension <name>`` header, then ``cover`` /
    ``endcover`` and ``base`` / ``endbase`` blocks each holding a group file,
    then ``proj`` followed by one index per cover element."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("extension"):
        raise MalformedGroupFile("missing 'extension' header")

    def block(start: str, end: str) -> list[str]:
        try:
            i = lines.index(start)
            j = lines.index(end)
        except ValueError:
            raise MalformedGroupFile(f"missing {start}/{end} block") from None
        return lines[i + 1 : j]

    cover = parse_group("\n".join(block("cover", "endcover")))
    base = parse_group("\n".join(block("base", "endbase")))
    k = lines.index("proj")
    proj = tuple(int(tok) for ln in lines[k + 1 :] for tok in ln.split())
    return CentralExtension(cover=cover, base=base, proj=proj)


def load_extension(path: str) -> CentralExtension:
    with open(path) as fh:
        return parse_extension(fh.read())


@dataclass
class ReducedMultiplier:
    """The quotient extension in which lifts of C never collide, plus the
    canonical lift of each class member."""

    parent: CentralExtension
    base_class: ConjClass
    collapse: tuple[int, ...]            # subgroup K of the parent kernel
    quotient: CentralExtension
    lifted_class: ConjClass              # class C' of the quotient cover
    lift: dict[int, int]                 # c in C  ->  its unique lift in C'

    @property
    def multiplier(self) -> tuple[int, ...]:
        """Elements of M(G,C) = kernel/K, as elements of the quotient cover."""
        return self.quotient.kernel

    @property
    def multiplier_order(self) -> int:
        return len(self.quotient.kernel)

    def multiplier_label(self, m: int) -> str:
        return self.quotient.cover.label(m)


def _quotient_by_central(ext: CentralExtension, K: tuple[int, ...]) -> tuple[CentralExtension, list[int]]:
    """Quotient the cover by the central subgroup K; returns the quotient
    extension over the same base and the cover->quotient index map."""
    cov = ext.cover
    mul = cov.mul
    coset_rep = [min(mul[x][k] for k in K) for x in range(cov.order)]
    reps = sorted(set(coset_rep))
    rep_index = {r: i for i, r in enumerate(reps)}
    to_q = [rep_index[coset_rep[x]] for x in range(cov.order)]
    qmul = [[to_q[mul[a][b]] for b in reps] for a in reps]
    qgroup = FiniteGroup(
        order=len(reps),
        mul=qmul,
        identity=to_q[cov.identity],
        name=f"{cov.name}/K{len(K)}",
        labels=[cov.label(r) for r in reps],
    )
    qproj = tuple(ext.proj[r] for r in reps)
    return CentralExtension(cover=qgroup, base=ext.base, proj=qproj), to_q


def reduced_multiplier(ext: CentralExtension, C: ConjClass) -> ReducedMultiplier:
    """Collapse K = {m in kernel : m*chat is conjugate to chat} and return the
    quotient extension with its designated lifted class.

    K is verified to be a subgroup and to be independent of the choice of lift
    and of class representative; failures indicate corrupted extension data.
    """
    base, cov = ext.base, ext.cover
    if C.group is not base:
        raise CorruptExtension("class does not belong to the extension's base")
    if not generates(base, C.members):
        raise CorruptExtension("class does not generate the base group")
    if not base.is_perfect():
        raise BaseNotPerfect(f"base group {base.name!r} is not perfect")

    mul = cov.mul

    def cover_class(x: int) -> frozenset[int]:
        return frozenset(cov.conj(x, h) for h in range(cov.order))

    chat = min(ext.fiber(C.representative))
    chat_class = cover_class(chat)
    K = tuple(sorted(m for m in ext.kernel if mul[m][chat] in chat_class))
    if cov.closure(K) != frozenset(K):
        raise CorruptExtension("collapse set is not a subgroup")

    # independence of representative and of lift: every lift of every member
    # of C must yield the same collapse set
    kset = set(K)
    for c in C.members:
        for lift in ext.fiber(c):
            cls = cover_class(lift)
            got = {m for m in ext.kernel if mul[m][lift] in cls}
            if got != kset:
                raise CorruptExtension(
                    f"collapse set depends on the lift of class member {c}"
                )

    quotient, to_q = _quotient_by_central(ext, K)
    qcov = quotient.cover
    qchat = to_q[chat]
    lifted_members = tuple(
        sorted({qcov.conj(qchat, h) for h in range(qcov.order)})
    )
    lifted = ConjClass(qcov, lifted_members, min(lifted_members), label="C'")

    lift: dict[int, int] = {}
    for q in lifted_members:
        c = quotient.proj[q]
        if c in lift:
            raise LiftAmbiguity(f"two lifts of {c} in the designated class")
        lift[c] = q
    if set(lift) != set(C.members):
        raise LiftAmbiguity("designated class does not cover C bijectively")

    # the quotient must separate lifts: m*lift(c) never conjugate to lift(c)
    qident = qcov.identity
    for c in C.members:
        qc = lift[c]
        qcls = {qcov.conj(qc, h) for h in range(qcov.order)}
        for m in quotient.kernel:
            if m != qident and qcov.mul[m][qc] in qcls:
                raise CorruptExtension(
                    "collapsed quotient still conjugates distinct lifts"
                )

    return ReducedMultiplier(
        parent=ext,
        base_class=C,
        collapse=K,
        quotient=quotient,
        lifted_class=lifted,
        lift=lift,
    )


def trivial_extension(G: FiniteGroup) -> CentralExtension:
    """G covering itself by the identity map (trivial kernel)."""
    return CentralExtension(cover=G, base=G, proj=tuple(range(G.order)))
