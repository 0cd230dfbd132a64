"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (printed as a stable error-code
string), 2 on usage errors including missing input files.  All randomness is
seeded through ``--seed``, so identical invocations produce byte-identical
output.  Budgets and the seed can also be set through ``PLATKNOT_*``
environment variables.
"""

from __future__ import annotations

import argparse
import os
import sys
from random import Random

from . import __version__
from .coloring import (
    count_colorings,
    count_pinned,
    count_q,
    image_breakdown,
    plat_transfer_count,
)
from .diagrams import component_count, load_diagram, parse_braid, parse_plat, serialize
from .errors import PlatknotError
from .extensions import load_extension, reduced_multiplier
from .groups import load_group, resolve_class
from .hurwitz import (
    DEFAULT_STATE_BUDGET,
    MonodromyTuple,
    apply_braid,
    canonical_signs,
    density_scan,
    enumerate_orbits,
    enumerate_rhat_slice,
    gadget_search,
    parse_tuple,
    schur,
)
from .zsat import (
    build_alphabet,
    compile_circuit,
    count_zsat,
    load_registry,
    parse_circuit,
    verify_reduction,
)


def _env_int(name: str, default: int) -> int:
    val = os.environ.get(f"PLATKNOT_{name}")
    return int(val) if val else default


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=_env_int("SEED", 0))
    p.add_argument(
        "--budget-states", type=int, default=_env_int("BUDGET_STATES", DEFAULT_STATE_BUDGET)
    )
    p.add_argument("--budget-depth", type=int, default=_env_int("BUDGET_DEPTH", 6))
    p.add_argument("--threads", type=int, default=_env_int("THREADS", 1))


def _load_file(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _group_and_class(args):
    if getattr(args, "extension", None):
        ext = load_extension(args.extension)
        G = ext.base
        C = resolve_class(G, args.klass)
        rm = reduced_multiplier(ext, C)
        return G, C, rm
    G = load_group(args.group)
    return G, resolve_class(G, args.klass), None


def _print_rows(rows, header):
    print("\t".join(header))
    for row in rows:
        print("\t".join(str(x) for x in row))


def cmd_group_info(args) -> int:
    G = load_group(args.group)
    print(f"group\t{G.name}")
    print(f"order\t{G.order}")
    print(f"perfect\t{G.is_perfect()}")
    print(f"simple\t{G.is_simple()}")
    rows = [
        (cls.label, len(cls), G.element_order(cls.representative), G.label(cls.representative))
        for cls in G.conjugacy_classes()
    ]
    _print_rows(rows, ("class", "size", "element_order", "representative"))
    return 0


def cmd_count(args) -> int:
    G, C, _ = _group_and_class(args)
    d, _ = load_diagram(args.knot)
    print(count_colorings(d, G, C))
    return 0


def cmd_pinned(args) -> int:
    G, C, _ = _group_and_class(args)
    d, meridian = load_diagram(args.knot)
    arc = args.arc if args.arc is not None else (meridian if meridian is not None else min(d.arcs))
    c = int(args.pin) if args.pin else C.representative
    print(count_pinned(d, arc, G, c, C=C.members))
    return 0


def cmd_q(args) -> int:
    G, C, _ = _group_and_class(args)
    d, meridian = load_diagram(args.knot)
    arc = args.arc if args.arc is not None else (meridian if meridian is not None else min(d.arcs))
    rep = count_q(d, G, C, pin_arc=arc)
    _print_rows(
        [
            (
                rep.pinned,
                rep.surjective_pinned,
                rep.surjective_total,
                rep.q,
                rep.aut_point_order,
                rep.aut_class_order,
            )
        ],
        ("pinned", "surj_pinned", "surj_total", "q", "aut_point", "aut_class"),
    )
    return 0


def cmd_breakdown(args) -> int:
    G, C, _ = _group_and_class(args)
    d, meridian = load_diagram(args.knot)
    rep = image_breakdown(d, G, C, pin_arc=meridian)
    _print_rows(
        [
            (b.label, b.subgroup_order, b.is_cyclic, b.aut_point_order, b.pinned_count, b.q)
            for b in rep.buckets
        ],
        ("image", "order", "cyclic", "aut_point", "pinned", "q"),
    )
    print(f"# pinned total\t{rep.pinned}")
    print(f"# reconstructed total\t{rep.reconstructed_total}")
    return 0


def cmd_plat_count(args) -> int:
    G, C, _ = _group_and_class(args)
    b = parse_braid(_load_file(args.braid))
    p = parse_plat(_load_file(args.plat))
    pin = None
    if args.pin:
        pos, c = args.pin.split(":")
        pin = (int(pos), int(c))
    print(plat_transfer_count(b, p, G, C, pin=pin))
    return 0


def cmd_orbits(args) -> int:
    G, C, rm = _group_and_class(args)
    rep = enumerate_orbits(
        args.k,
        G,
        C,
        rm,
        stratum=args.stratum,
        budget=args.budget_states,
        rng=Random(args.seed) if args.shuffle else None,
    )
    print(f"# k\t{rep.k}")
    print(f"# stratum\t{rep.stratum}")
    print(f"# slice_states\t{rep.slice_states}")
    print(f"# orbits\t{rep.orbit_count}")
    print(f"# orbits_up_to_conjugation\t{rep.orbit_count_up_to_conj}")
    print(f"# sch_constant_on_orbits\t{rep.sch_constant}")
    _print_rows(
        [(r.orbit_id, r.slice_size, r.full_size, r.sch_label or "-", r.sample) for r in rep.rows],
        ("orbit", "slice_size", "full_size", "sch", "sample"),
    )
    if args.plot:
        from .reports import orbits_figure

        orbits_figure(rep, args.plot)
        print(f"# figure\t{args.plot}")
    return 0


def cmd_schur(args) -> int:
    ext = load_extension(args.extension)
    G = ext.base
    C = resolve_class(G, args.klass)
    rm = reduced_multiplier(ext, C)
    t = parse_tuple(args.tuple)
    val = schur(t, rm)
    print(rm.multiplier_label(val))
    return 0


def cmd_density(args) -> int:
    G, C, rm = _group_and_class(args)
    rows = density_scan(G, C, rm, args.kmax, budget=args.budget_states)
    out = []
    from fractions import Fraction

    lim = Fraction(1, G.order)
    lim0 = Fraction(1, G.order * rm.multiplier_order) if rm else None
    for r in rows:
        line = [r.k, r.count, f"{float(r.ratio):.10f}", f"{float(abs(r.ratio - lim)):.3e}"]
        if r.count0 is not None:
            line += [r.count0, f"{float(r.ratio0):.10f}", f"{float(abs(r.ratio0 - lim0)):.3e}"]
        out.append(tuple(line))
    header = ("k", "count", "ratio", "deviation")
    if rows and rows[0].count0 is not None:
        header += ("count0", "ratio0", "deviation0")
    _print_rows(out, header)
    if args.plot:
        from .reports import density_figure

        density_figure(rows, G.order, rm.multiplier_order if rm else None, args.plot)
        print(f"# figure\t{args.plot}")
    return 0


def cmd_alphabet(args) -> int:
    ext = load_extension(args.extension)
    G = ext.base
    C = resolve_class(G, args.klass)
    rm = reduced_multiplier(ext, C)
    c = int(args.pin) if args.pin else C.representative
    alph = build_alphabet(G, C, c, args.k, rm, budget=args.budget_states)
    print(f"alphabet\t{alph.size}")
    print(f"initial\t{len(alph.initial)}")
    print(f"final\t{len(alph.final)}")
    print(f"u_order\t{len(alph.U)}")
    print(f"degenerate\t{alph.degenerate}")
    print(f"proper_initial\t{alph.proper_initial}")
    print(f"proper_final\t{alph.proper_final}")
    if args.verbose:
        for i, t in enumerate(alph.symbols):
            flags = ("I" if i in set(alph.initial) else "-") + (
                "F" if i in set(alph.final) else "-"
            )
            print(f"{i}\t{flags}\t{t.literal(G)}")
    return 0


def _load_instance(args):
    cf = parse_circuit(_load_file(args.circuit), base_dir=os.path.dirname(args.circuit) or ".")
    G = load_group(cf.group_path)
    C = resolve_class(G, cf.class_spec)
    if cf.extension_path is None:
        raise PlatknotError("circuit file needs an extension line for the alphabet")
    ext = load_extension(cf.extension_path)
    # the alphabet lives on the extension's base copy of the group
    Gb = ext.base
    Cb = resolve_class(Gb, cf.class_spec)
    rm = reduced_multiplier(ext, Cb)
    c = int(cf.pin_spec) if cf.pin_spec else Cb.representative
    alph = build_alphabet(Gb, Cb, c, cf.k, rm)
    registry = load_registry(args.registry)
    return cf, alph, registry


def _smaller_pairs(specs):
    out = []
    for spec in specs or ():
        path, label = spec.rsplit(":", 1)
        J = load_group(path)
        out.append((J, resolve_class(J, label)))
    return out


def cmd_zsat_count(args) -> int:
    cf, alph, registry = _load_instance(args)
    rep = count_zsat(cf.circuit, alph, registry)
    _print_rows(
        [(rep.count, rep.nontrivial_orbit_count, rep.u_order)],
        ("solutions", "nontrivial_orbits", "u_order"),
    )
    return 0


def cmd_compile(args) -> int:
    cf, alph, registry = _load_instance(args)
    comp = compile_circuit(cf.circuit, alph, registry)
    text = serialize(comp.diagram)
    # the meridian arc id after canonical renumbering
    renum: dict[int, int] = {}
    for c in comp.diagram.crossings:
        for a in (c.over, c.under_in, c.under_out):
            if a not in renum:
                renum[a] = len(renum) + 1
    for a in comp.diagram.circles:
        if a not in renum:
            renum[a] = len(renum) + 1
    text += f"meridian {renum[comp.meridian]}\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"# wrote {args.output}: {comp.crossing_count} crossings, "
              f"{component_count(comp.diagram)} component(s)")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    cf, alph, registry = _load_instance(args)
    rep = verify_reduction(
        cf.circuit,
        alph,
        registry,
        smaller_pairs=_smaller_pairs(args.smaller),
        rng=Random(args.seed),
    )
    print(f"zsat_count\t{rep.zsat.count}")
    print(f"nontrivial_orbits\t{rep.zsat.nontrivial_orbit_count}")
    print(f"wirtinger_pinned\t{rep.wirtinger_pinned}")
    print(f"transfer_pinned\t{rep.transfer_pinned}")
    print(f"three_way_equal\t{rep.three_way_equal}")
    print(f"components\t{rep.components}")
    print(f"crossings\t{rep.crossing_count}")
    for s in rep.smaller:
        print(f"q_smaller\t{s.label}\t{s.q_report.q}")
    for name, g in rep.gadget_reports.items():
        rub = g.rubik.is_member if g.rubik else None
        print(
            f"gadget\t{name}\tmaps_alphabet={g.maps_alphabet.ok}\trubik={rub}\t"
            f"outside={g.trivial_outside.ok}({g.trivial_outside.regime})\t"
            + "\t".join(f"{lbl}={pc.ok}({pc.regime})" for lbl, pc in g.smaller_trivial)
            + f"\tpure={g.pure.ok}"
        )
    return 0


def cmd_gadget_search(args) -> int:
    G, C, rm = _group_and_class(args)
    signs = canonical_signs(args.k)
    states = [MonodromyTuple(signs, e) for e in enumerate_rhat_slice(args.k, G, C)]
    if args.plant:
        from .diagrams import BraidWord

        letters = tuple(int(t) for t in args.plant.split())
        planted = BraidWord(2 * args.k, letters)
        target = {t: apply_braid(t, planted, G) for t in states}
    else:
        target = {t: t for t in states}
    word = gadget_search(
        args.k, G, C, rm, target, depth_cap=args.budget_depth, budget=args.budget_states
    )
    if word is None:
        print("NOTFOUND")
    else:
        print(f"braid {word.strands}: " + " ".join(str(x) for x in word.letters))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="platknot",
        description="class-restricted coloring counts, Hurwitz orbits, and the circuit-to-knot compiler",
    )
    ap.add_argument("--version", action="version", version=f"platknot {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        _add_common(p)
        return p

    p = add("group-info", cmd_group_info, help="order, flags, and conjugacy classes")
    p.add_argument("--group", required=True)

    for name, fn in (("count", cmd_count),):
        p = add(name, fn, help="total coloring count of a diagram")
        p.add_argument("--knot", required=True)
        p.add_argument("--group", required=True)
        p.add_argument("--class", dest="klass", required=True)

    p = add("pinned", cmd_pinned, help="colorings with one arc pinned")
    p.add_argument("--knot", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--arc", type=int)
    p.add_argument("--pin", help="element index to pin (default: class representative)")

    p = add("q", cmd_q, help="surjective counts modulo automorphisms")
    p.add_argument("--knot", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--arc", type=int)

    p = add("breakdown", cmd_breakdown, help="pinned colorings by image subgroup class")
    p.add_argument("--knot", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--class", dest="klass", required=True)

    p = add("plat-count", cmd_plat_count, help="transfer-matrix count through a plat closure")
    p.add_argument("--braid", required=True)
    p.add_argument("--plat", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--pin", help="POSITION:ELEMENT bottom pin")

    p = add("orbits", cmd_orbits, help="colored-braid orbit stratification")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--group")
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--extension")
    p.add_argument("--stratum", default="R", choices=("Rhat", "R", "Rhat0", "R0"))
    p.add_argument("--shuffle", action="store_true", help="randomize generator order")
    p.add_argument("--plot", help="write an orbit-size figure to this file")

    p = add("schur", cmd_schur, help="Schur invariant of a trivial-product tuple")
    p.add_argument("--tuple", required=True, help="literal like '[+3 -7 +3 -7]'")
    p.add_argument("--extension", required=True)
    p.add_argument("--class", dest="klass", required=True)

    p = add("density", cmd_density, help="exact trivial-product densities per k")
    p.add_argument("--group")
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--extension")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--plot", help="write a convergence figure to this file")

    p = add("alphabet", cmd_alphabet, help="build and summarize the circuit alphabet")
    p.add_argument("--extension", required=True)
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pin")
    p.add_argument("--verbose", action="store_true")

    p = add("zsat-count", cmd_zsat_count, help="exact circuit solution count")
    p.add_argument("--circuit", required=True)
    p.add_argument("--registry", required=True)

    p = add("compile", cmd_compile, help="compile a circuit to a plat-closed diagram")
    p.add_argument("--circuit", required=True)
    p.add_argument("--registry", required=True)
    p.add_argument("-o", "--output")

    p = add("verify", cmd_verify, help="three-way count equality on a compiled circuit")
    p.add_argument("--circuit", required=True)
    p.add_argument("--registry", required=True)
    p.add_argument("--smaller", action="append", help="GROUPFILE:CLASS, repeatable")

    p = add("gadget-search", cmd_gadget_search, help="search pure braids realizing a target action")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--group")
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--extension")
    p.add_argument("--plant", help="pure braid letters whose action becomes the target")

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1 or args.budget_states < 1 or args.budget_depth < 1:
        ap.error("budgets and thread count must be positive")
    try:
        return args.fn(args)
    except PlatknotError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except FileNotFoundError as err:
        print(f"usage error: missing file {err.filename}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
