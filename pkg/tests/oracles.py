"""Independent brute-force oracles used to freeze expected values.

These deliberately avoid the production engines: colorings are counted by
enumerating every assignment, and plat helpers build random instances.
"""

from __future__ import annotations

from itertools import product
from random import Random

from platknot.diagrams import BraidWord, PlatPairing, plat_closure


def brute_count(d, G, domain, pin=None):
    """Try every assignment of ``domain`` to the arcs; check each crossing
    relation from scratch."""
    arcs = d.arcs
    mul, inv = G.mul, G.inv
    total = 0
    for combo in product(domain, repeat=len(arcs)):
        col = dict(zip(arcs, combo))
        if pin is not None and col[pin[0]] != pin[1]:
            continue
        ok = True
        for c in d.crossings:
            o, ui, uo = col[c.over], col[c.under_in], col[c.under_out]
            if c.sign > 0:
                want = mul[mul[inv[o]][ui]][o]
            else:
                want = mul[mul[o][ui]][inv[o]]
            if want != uo:
                ok = False
                break
        if ok:
            total += 1
    return total


def random_noncrossing(s: int, rng: Random) -> tuple[tuple[int, int], ...]:
    def rec(pts):
        if not pts:
            return []
        a = pts[0]
        i = rng.choice(range(1, len(pts), 2))
        return [(a, pts[i])] + rec(pts[1:i]) + rec(pts[i + 1 :])

    return tuple(rec(list(range(1, s + 1))))


def random_plat(rng: Random, max_strands=4, max_letters=8):
    s = rng.choice([x for x in (2, 4, 6) if x <= max_strands])
    L = rng.randint(0, max_letters)
    letters = tuple(
        rng.choice([i for i in range(-(s - 1), s) if i != 0]) for _ in range(L)
    )
    b = BraidWord(s, letters)
    p = PlatPairing(random_noncrossing(s, rng), random_noncrossing(s, rng))
    return b, p


def random_diagram(rng: Random, max_strands=6, max_letters=10):
    b, p = random_plat(rng, max_strands, max_letters)
    return plat_closure(b, p)
