#!/usr/bin/env python3
"""Standalone 3^3 brute-force check of the trefoil transposition count.

Deliberately independent of the platknot package: the diagram file is parsed
with a local regex, the order-6 symmetric group is built from scratch as
permutations of three letters, and every assignment of a transposition to
each arc is tested against the crossing relations directly.

Usage: trefoil_bruteforce.py [path/to/trefoil.pd]
"""

import itertools
import os
import re
import sys

X_RE = re.compile(r"^X([+-])\[(\d+),(\d+),(\d+)\]$")


def compose(p, q):
    return tuple(p[q[i]] for i in range(3))


def invert(p):
    out = [0, 0, 0]
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data", "trefoil.pd"
    )
    crossings = []
    arcs = set()
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            m = X_RE.match(line)
            if m:
                sign = 1 if m.group(1) == "+" else -1
                o, ui, uo = int(m.group(2)), int(m.group(3)), int(m.group(4))
                crossings.append((sign, o, ui, uo))
                arcs.update((o, ui, uo))
    arcs = sorted(arcs)
    assert len(arcs) == 3 and len(crossings) == 3, "not a 3-arc trefoil file"

    transpositions = [(1, 0, 2), (0, 2, 1), (2, 1, 0)]
    count = 0
    for combo in itertools.product(transpositions, repeat=3):
        col = dict(zip(arcs, combo))
        ok = True
        for sign, o, ui, uo in crossings:
            po, pi_, po_out = col[o], col[ui], col[uo]
            if sign > 0:
                want = compose(compose(invert(po), pi_), po)
            else:
                want = compose(compose(po, pi_), invert(po))
            if want != po_out:
                ok = False
                break
        if ok:
            count += 1
    print(count)
    return 0


if __name__ == "__main__":
    sys.exit(main())
