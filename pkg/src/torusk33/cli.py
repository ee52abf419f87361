"""Command-line front end: recognize, count, verify."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .graph import ParseError, parse_edge_list

EXIT_MEMBER, EXIT_NON_MEMBER, EXIT_INPUT = 0, 1, 2

VARIANTS = ("all", "non-projective", "irreducible", "totals", "irreducible-totals")


def _table(args):
    from .planar_networks import load_table
    return load_table(8 if args.sweep8 else 7, cache=args.cache, threads=args.threads)


def cmd_recognize(args) -> int:
    from .recognizer import RecognitionError, format_error, recognize

    try:
        text = sys.stdin.read() if args.path == "-" else Path(args.path).read_text()
        g = parse_edge_list(text)
    except (OSError, ParseError) as exc:
        print(f"ParseError\nreason: {exc}")
        return EXIT_INPUT
    try:
        d = recognize(g)
    except RecognitionError as exc:
        if args.format == "structured":
            print(json.dumps(_error_record(exc), sort_keys=True))
        else:
            sys.stdout.write(format_error(exc))
        return EXIT_NON_MEMBER
    if args.format == "structured":
        print(json.dumps(_member_record(d), sort_keys=True))
    else:
        print("Member")
        sys.stdout.write(d.serialize())
    return EXIT_MEMBER


def _member_record(d) -> dict:
    return {
        "member": True,
        "core": d.core.kind,
        "cycle_length": d.core.cycle_length,
        "substituted": list(d.core.substituted or ()),
        "vertex_map": list(d.vertex_map),
        "components": [
            {"core_edge": list(e), "poles": [c.a, c.b], "edges": sorted(map(list, c.edges))}
            for e, c in zip(d.core_edges(), d.components)
        ],
    }


def _error_record(exc) -> dict:
    rec = {"member": False, "category": exc.category, "reason": str(exc)}
    w = getattr(exc, "witness", None)
    if w is not None:
        rec["witness"] = {"kind": w.kind, "branch_vertices": list(w.branch_vertices),
                          "paths": [list(p) for p in w.paths]}
    return rec


def cmd_count(args) -> int:
    from . import enumeration as en

    table = _table(args)
    try:
        if args.variant == "all":
            s = en.toroidal_series(args.order, table)
        elif args.variant in ("non-projective", "totals"):
            s = en.non_projective_series(args.order, table)
        else:
            s = en.irreducible_series(args.order, table)
    except en.InsufficientPlanarTable as exc:
        print(f"InsufficientPlanarTable: {exc}", file=sys.stderr)
        return EXIT_INPUT
    by_vertices = args.variant.endswith("totals")
    sys.stdout.write(en.render_tables(s, args.format, by_vertices=by_vertices))
    return 0


def _checks(args):
    """Yield (name, callable returning None or raising) pairs."""
    from . import crowns, enumeration as en, generator, planar_networks as pn
    from .recognizer import recognize

    state = {}

    def table():
        state["table"] = _table(args)

    def bounds():
        t = state["table"]
        top = en.max_order(t.n_cap, False)
        en.verify_edge_bounds(en.non_projective_series(min(args.order, top), t))
        en.verify_edge_bounds(en.toroidal_series(min(args.order, en.max_order(t.n_cap, True)), t))

    def bc():
        assert crowns.bc_series(20) == crowns.bc_series_sum(20)

    def cc():
        assert crowns.cc_series(20) == crowns.cc_closed_form(20)
        direct = crowns.crown_counts_by_automorphisms(16)
        got = crowns.cc_series(16).counts()
        assert direct == {k: v for k, v in got.items() if v}

    def matchings():
        for n in range(13):
            assert crowns.path_matching_poly(n) == crowns.brute_matching_poly(n, [(i, i + 1) for i in range(n - 1)])
        for n in range(3, 13):
            assert crowns.cycle_matching_poly(n) == crowns.brute_matching_poly(n, [(i, (i + 1) % n) for i in range(n)])

    def networks():
        from math import factorial
        ns = pn.planar_network_series(4, state["table"])
        for k in range(5):
            want = {e[0]: int(c * factorial(k)) for e, c in ns.coeffs[k].items()}
            assert pn.network_counts(k) == want, k

    def round_trip():
        rng = random.Random(args.seed)
        spec = generator.GenSpec(seed=args.seed)
        for _ in range(50):
            g, truth = generator.random_member(spec, rng)
            assert recognize(g) == truth

    yield "planar table", table
    yield "edge bounds", bounds
    yield "pair series closed form", bc
    yield "crown series closed form and direct count", cc
    yield "matching polynomials", matchings
    yield "network series vs explicit networks", networks
    yield "round trip", round_trip
    if args.sweep8:
        def sweep():
            r = generator.exhaustive_sweep(8, {18, 19})
            got = (r.histogram["MStarGraph"], r.histogram["MGraph"])
            print(f"  8-vertex sweep: M* {got[0]}, M {got[1]}")
            assert got == (280, 280)
            assert r.accepted_by_edges[18] - r.histogram["K5"] == 280
        yield "8-vertex sweep agreement", sweep


def cmd_verify(args) -> int:
    failed = 0
    for name, fn in _checks(args):
        try:
            fn()
        except Exception as exc:  # any failure is reported, not raised
            failed += 1
            print(f"FAIL {name}: {type(exc).__name__}: {exc}")
        else:
            print(f"PASS {name}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torusk33", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=13)
        p.add_argument("--sweep8", action="store_true", help="use planar counts through 8 vertices")
        p.add_argument("--cache", type=Path, default=None, help="planar count cache file")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("recognize", help="decompose a graph or explain why it is not a member")
    p.add_argument("path", help="edge-list file ('-' for stdin)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("count", help="print counting tables")
    common(p)
    p.add_argument("--variant", choices=VARIANTS, default="non-projective")
    p.add_argument("--format", choices=("tsv", "text"), default="tsv")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run internal consistency checks")
    common(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "order", 5) < 5:
        print("--order must be at least 5", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "threads", 1) < 1:
        print("--threads must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
