#!/usr/bin/env python3
"""Regenerate the data files shipped under data/.

The binary icosahedral cover is tabulated from the two standard generator
matrices over F_5; its central quotient supplies the base block and the
projection table.  Everything written here is re-validated from scratch by
the library loaders (homomorphism, surjectivity, centrality), so this script
is provisioning, not trusted computation.
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from platknot.diagrams import BraidWord, PlatPairing, plat_closure, serialize, trace_plat
from platknot.hurwitz import full_twist

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def sl25_table():
    def mml(a, b):
        return (
            (a[0] * b[0] + a[1] * b[2]) % 5,
            (a[0] * b[1] + a[1] * b[3]) % 5,
            (a[2] * b[0] + a[3] * b[2]) % 5,
            (a[2] * b[1] + a[3] * b[3]) % 5,
        )

    S = (0, 4, 1, 0)
    T = (1, 1, 0, 1)
    ident = (1, 0, 0, 1)
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in (S, T):
                q = mml(m, g)
                if q not in index:
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elems)
    assert n == 120, n
    mul = [[index[mml(a, b)] for b in elems] for a in elems]
    neg = index[(4, 0, 0, 4)]
    return elems, index, mul, neg


def write_extension(path):
    elems, index, mul, neg = sl25_table()
    n = len(elems)
    # central quotient by {I, -I}
    rep = [min(x, mul[x][neg]) for x in range(n)]
    reps = sorted(set(rep))
    qidx = {r: i for i, r in enumerate(reps)}
    proj = [qidx[rep[x]] for x in range(n)]
    qmul = [[proj[mul[a][b]] for b in reps] for a in reps]

    lines = ["extension sl25_a5", "cover", f"group sl25 order {n}", "table"]
    lines += [" ".join(str(v) for v in row) for row in mul]
    lines += ["endcover", "base", f"group a5q order {len(reps)}", "table"]
    lines += [" ".join(str(v) for v in row) for row in qmul]
    lines += ["endbase", "proj"]
    lines += [" ".join(str(v) for v in proj[i : i + 20]) for i in range(0, n, 20)]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote", path)


def write_groups():
    files = {
        "s3.grp": "group s3 order 6\nperm 3\n(1 2)\n(1 2 3)\nalias t 2a\n",
        "a5.grp": (
            "group a5 order 60\nperm 5\n(1 2 3 4 5)\n(1 2 3)\n"
            "alias 5c 5a\nalias inv 2a\nalias 3c 3a\n"
        ),
        "z3.grp": "group z3 order 3\ntable\n0 1 2\n1 2 0\n2 0 1\n",
        "z6.grp": "group z6 order 6\ntable\n"
        + "".join(" ".join(str((i + j) % 6) for j in range(6)) + "\n" for i in range(6)),
        "d10.grp": "group d10 order 10\nperm 5\n(1 2 3 4 5)\n(2 5)(3 4)\nalias r 2a\n",
    }
    for name, text in files.items():
        path = os.path.join(DATA, name)
        with open(path, "w") as fh:
            fh.write(text)
        print("wrote", path)


def find_figure8():
    """Search small 4-plats for the figure-eight coloring profile: 4 crossings,
    one component, 3 dihedral-of-6 colorings (only constant) and 25 dihedral-
    of-10 colorings."""
    from itertools import product

    from platknot.coloring import count_colorings
    from platknot.diagrams import component_count
    from platknot.groups import parse_group, resolve_class

    s3 = parse_group(open(os.path.join(DATA, "s3.grp")).read())
    d10 = parse_group(open(os.path.join(DATA, "d10.grp")).read())
    c3 = resolve_class(s3, "2a")
    c10 = resolve_class(d10, "2a")
    caps = PlatPairing(((1, 2), (3, 4)), ((1, 2), (3, 4)))
    for L in (4, 5, 6):
        for letters in product([1, -1, 2, -2, 3, -3], repeat=L):
            b = BraidWord(4, letters)
            d = plat_closure(b, caps)
            if len(d.crossings) != 4 or component_count(d) != 1:
                continue
            if count_colorings(d, s3, c3) != 3:
                continue
            if count_colorings(d, d10, c10) == 25:
                return b, caps, d
    raise SystemExit("no figure-eight plat found")


def write_knots():
    trefoil = plat_closure(
        BraidWord(4, (2, 2, 2)), PlatPairing(((1, 2), (3, 4)), ((1, 2), (3, 4)))
    )
    with open(os.path.join(DATA, "trefoil.pd"), "w") as fh:
        fh.write("# trefoil, 2-bridge plat of sigma_2^3\n" + serialize(trefoil))
    with open(os.path.join(DATA, "unknot.pd"), "w") as fh:
        fh.write("# crossing-free unknot\nO[1]\n")
    b, caps, d = find_figure8()
    with open(os.path.join(DATA, "figure8.pd"), "w") as fh:
        fh.write(f"# figure-eight, plat of {b}\n" + serialize(d))
    print("wrote knot files; figure-eight braid:", b)


def write_braids():
    with open(os.path.join(DATA, "trefoil.braid"), "w") as fh:
        fh.write("braid 4: 2 2 2\n")
    with open(os.path.join(DATA, "trefoil.plat"), "w") as fh:
        fh.write("bottom: (1 2)(3 4)\ntop: (1 2)(3 4)\n")
    print("wrote braid/plat files")


def write_gadgets():
    gdir = os.path.join(DATA, "gadgets")
    os.makedirs(gdir, exist_ok=True)
    ft = full_twist(8)
    with open(os.path.join(gdir, "fulltwist_k2.gad"), "w") as fh:
        fh.write("# full twist on 8 strands: central, identity on trivial-product tuples\n")
        fh.write("gadget fulltwist strands 8\n")
        fh.write("word " + " ".join(str(x) for x in ft.letters) + "\n")
    with open(os.path.join(gdir, "trivword_k2.gad"), "w") as fh:
        fh.write("# a nonempty word for the trivial braid element\n")
        fh.write("gadget trivword strands 8\n")
        fh.write("word 1 2 -2 -1\n")
    print("wrote gadget files")


def write_circuits():
    files = {
        "identity_k2_w2.zsat": (
            "zsat width 2 k 2 group a5.grp class 5a\n"
            "extension sl25_a5.ext\n"
        ),
        "identity_k3_w1.zsat": (
            "zsat width 1 k 3 group a5.grp class 5a\n"
            "extension sl25_a5.ext\n"
        ),
        "planted_k2_w2.zsat": (
            "zsat width 2 k 2 group a5.grp class 5a\n"
            "extension sl25_a5.ext\n"
            "gate fulltwist at 1\n"
        ),
    }
    for name, text in files.items():
        path = os.path.join(DATA, name)
        with open(path, "w") as fh:
            fh.write(text)
        print("wrote", path)


if __name__ == "__main__":
    os.makedirs(DATA, exist_ok=True)
    write_groups()
    write_extension(os.path.join(DATA, "sl25_a5.ext"))
    write_knots()
    write_braids()
    write_gadgets()
    write_circuits()
