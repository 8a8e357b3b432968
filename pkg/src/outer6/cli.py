"""Command line: ``outer6 {enumerate,outer,invariants,verify}``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input
(usage, JSON schema, cycle syntax), 3 internal invariant violated,
4 dimension mismatch, 5 malformed rational.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import moduli as M
from . import mystic
from .perms import CycleParseError, format_cycles, parse_cycles

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_INTERNAL, EXIT_DIMENSION, EXIT_RATIONAL = 0, 1, 2, 3, 4, 5
INPUT_EXIT = {"schema": EXIT_INPUT, "dimension": EXIT_DIMENSION, "rational": EXIT_RATIONAL}

KINDS = ("pentagons", "triangle-colorings", "synthemes", "pentads", "icosahedra",
         "letter-dictionary")
MAPS = ("segre", "igusa-p1", "p2", "p3")


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def _error(msg: str, code: int, as_json: bool) -> int:
    if as_json:
        _emit({"error": msg, "exit_code": code})
    else:
        sys.stderr.write(f"outer6: {msg}\n")
    return code


def enumeration(kind: str):
    if kind == "pentagons":
        return [p.to_json() for p in mystic.enumerate_pentagons()]
    if kind == "triangle-colorings":
        cols = mystic.canonical_colorings()
        out = []
        for x in "abcdef":
            rec = cols[x].to_json()
            rec["pentagon"] = x
            out.append(rec)
        return out
    if kind == "synthemes":
        return [mystic.fmt_syntheme(s) for s in mystic.enumerate_synthemes()]
    if kind == "pentads":
        owner = {mystic.pentad_of_pentagon(p): p.label for p in mystic.enumerate_pentagons()}
        return [{"pentagon": owner.get(P),
                 "synthemes": sorted(mystic.fmt_syntheme(s) for s in P)}
                for P in mystic.enumerate_pentads()]
    if kind == "icosahedra":
        icos = mystic.enumerate_icosahedra()
        opp = {}
        for i, j in mystic.opposite_pairs():
            opp[i], opp[j] = j, i
        out = []
        for k, l in enumerate(icos):
            p, col = mystic.icosahedron_to_pentagon(l)
            rec = l.to_json()
            rec.update({"index": k, "opposite": opp[k], "pentagon": p.label, "colour": col})
            out.append(rec)
        return out
    if kind == "letter-dictionary":
        return {"pentagons": mystic.letter_dictionary(),
                "pairs_to_synthemes": {k: mystic.fmt_syntheme(s)
                                       for k, s in M.pair_dictionary().items()}}
    raise ValueError(f"unknown kind {kind!r}")


def cmd_enumerate(args) -> int:
    _emit({"kind": args.kind, "records": enumeration(args.kind)})
    return EXIT_OK


def cmd_outer(args) -> int:
    if args.direction == "points-to-letters":
        g = parse_cycles(args.perm, 6, alphabet="points")
        image = format_cycles(mystic.outer_via_triangles(g), letters=True)
    else:
        h = parse_cycles(args.perm, 6, alphabet="letters")
        image = format_cycles(mystic.outer_via_cosets(h))
    if args.json:
        _emit({"input": args.perm, "direction": args.direction, "image": image})
    else:
        print(image)
    return EXIT_OK


def load_points(path: str) -> M.PointConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise M.InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise M.InputError(f"{path} is not valid JSON: {exc}") from None
    return M.PointConfig.from_json(doc)


def invariants(name: str, c: M.PointConfig, rule: str = M.DEFAULT_RULE) -> dict:
    if name == "segre":
        vec, extra = M.segre_map(c), {}
    elif name == "igusa-p1":
        vec, extra = M.igusa_p1_map(c), {}
    elif name == "p2":
        vec, V = M.p2_map(c)
        extra = {"V": M._fmt(V)}
    elif name == "p3":
        vec, extra = M.p3_map(c, rule), {"rule": rule}
    else:
        raise ValueError(f"unknown map {name!r}")
    if vec.total() != 0:
        raise AssertionError(f"{name}: coordinates do not sum to zero")
    doc = {"map": name, "space": f"P{c.dim}"}
    doc.update(vec.to_json())
    doc.update(extra)
    return doc


def cmd_invariants(args) -> int:
    c = load_points(args.points)
    _emit(invariants(args.map, c, args.rule))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    report = run_suite(args.suite, seed=args.seed, trials=args.trials)
    _emit(report.to_json(timing=args.timing))
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outer6", description="The outer automorphism of S6 and invariants of six points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list pentagons, synthemes, pentads, ...")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("outer", help="image of a permutation under the outer isomorphism")
    p.add_argument("perm", help='cycle notation, e.g. "(1 2)" or "(a d)(b c)(e f)"')
    p.add_argument("--direction", choices=("points-to-letters", "letters-to-points"),
                   default="points-to-letters")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_outer)

    p = sub.add_parser("invariants", help="evaluate an invariant map on six points")
    p.add_argument("map", choices=MAPS)
    p.add_argument("--points", required=True, help="PointConfig JSON file")
    p.add_argument("--rule", choices=M.ORBIT_RULES, default=M.DEFAULT_RULE,
                   help="orbit rule for p3")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("suite", nargs="?", default="all", choices=("all",) + _suites())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=64)
    p.add_argument("--timing", action="store_true", help="include per-check seconds")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def _suites():
    from .verify import SUITES
    return SUITES


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False)
    if getattr(args, "trials", 1) < 1:
        return _error("--trials must be positive", EXIT_INPUT, as_json)
    try:
        return args.func(args)
    except CycleParseError as exc:
        return _error(f"cannot parse permutation: {exc}", EXIT_INPUT, as_json)
    except M.InputError as exc:
        return _error(str(exc), INPUT_EXIT[exc.kind], as_json)
    except AssertionError as exc:
        return _error(f"internal invariant violated: {exc}", EXIT_INTERNAL, as_json)


if __name__ == "__main__":
    sys.exit(main())
