"""Command-line front end.

Reports are emitted as JSON on stdout; human-oriented progress lines go
to stderr and are suppressed by --quiet.  Exit status 0 means every
requested check passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .action import Word
from .equations import FormKind, eqset_from_json, generate_all_equations
from .rings import ring_from_name
from .root_system import build_root_system
from .signs import build_sign_table
from .squares import enumerate_squares
from .verify import SUITE_NAMES, report_json, run_suite, verify_orbit_membership


def _add_system(parser):
    parser.add_argument("--system", required=True, help="root system, e.g. D5, D6, E6, E7, E8")


def _progress(quiet: bool):
    if quiet:
        return None
    return lambda line: print(line, file=sys.stderr)


def cmd_roots(args) -> int:
    rs = build_root_system(args.system)
    if args.json:
        doc = {
            "system": str(rs.system),
            "dim_v": rs.dim_v,
            "count": rs.n_roots,
            "roots": [list(r) for r in rs.roots],
        }
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        print(f"# {rs.system}: {rs.n_roots} roots, module rank {rs.dim_v}", file=sys.stderr)
        for r in rs.roots:
            print(" ".join(str(x) for x in r))
    return 0


def cmd_squares(args) -> int:
    rs = build_root_system(args.system)
    squares = enumerate_squares(rs)
    if args.count_only:
        doc = {"system": str(rs.system), "count": len(squares), "k": rs.k}
    else:
        doc = {
            "system": str(rs.system),
            "count": len(squares),
            "k": rs.k,
            "squares": [sq.to_json() for sq in squares],
        }
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return 0


_KIND_ALIASES = {"pi2": "pi/2", "2pi3": "2pi/3"}


def cmd_equations(args) -> int:
    rs = build_root_system(args.system)
    signs = build_sign_table(rs)
    eqset = generate_all_equations(rs, signs)
    if args.kind != "all":
        kind = FormKind(_KIND_ALIASES.get(args.kind, args.kind))
        from .equations import EquationSet

        eqset = EquationSet(rs.system, tuple(f for f in eqset.forms if f.kind is kind))
    text = eqset.to_json(rs)
    if args.out and args.out != "-":
        with open(args.out, "w") as f:
            f.write(text)
            f.write("\n")
    else:
        print(text)
    print(
        json.dumps({"system": str(rs.system), "counts": eqset.counts()}, sort_keys=True),
        file=sys.stderr,
    )
    return 0


def cmd_check(args) -> int:
    rs = build_root_system(args.system)
    signs = build_sign_table(rs)
    with open(args.vector) as f:
        vdoc = json.load(f)
    if vdoc["system"] != str(rs.system):
        print(json.dumps({"error": "vector system mismatch"}), file=sys.stderr)
        return 2
    ring = ring_from_name(vdoc["ring"])
    from .action import AdjointVector

    coords = [ring.parse(s) for s in vdoc["coords"]]
    if len(coords) != rs.dim_v:
        print(json.dumps({"error": "vector has wrong length"}), file=sys.stderr)
        return 2
    v = AdjointVector(rs, ring, coords)
    if args.equations:
        with open(args.equations) as f:
            eqset = eqset_from_json(rs, json.load(f))
    else:
        eqset = generate_all_equations(rs, signs)
    ok, witness = eqset.check_vector(v)
    print(json.dumps({"ok": ok, "witness": witness}, sort_keys=True, separators=(",", ":")))
    return 0 if ok else 1


def cmd_orbit(args) -> int:
    rs = build_root_system(args.system)
    signs = build_sign_table(rs)
    ring = ring_from_name(args.ring)
    with open(args.word) as f:
        word = Word.from_json(json.load(f), rs, ring)
    rho = tuple(int(x) for x in json.loads(args.rho))
    rs.root_index(rho)
    eqset = generate_all_equations(rs, signs)
    ok, witness = verify_orbit_membership(rs, signs, eqset, word, rho, ring)
    doc = {
        "ok": ok,
        "system": str(rs.system),
        "rho": list(rho),
        "ring": ring.name,
        "witness": witness,
    }
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    rings = tuple(ring_from_name(r) for r in args.ring) if args.ring else None
    reports = run_suite(
        args.system,
        suite=args.suite,
        seed=args.seed,
        samples=args.samples,
        rings=rings,
        progress=_progress(args.quiet),
    )
    print(report_json(reports, include_timing=args.timing))
    return 0 if all(r.ok for r in reports) else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="adjoint-quadrics",
        description="Quadratic equations for highest weight orbits in adjoint "
        "representations of simply-laced Chevalley groups.",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress per-check lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="list the roots of a system")
    _add_system(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("squares", help="enumerate maximal squares")
    _add_system(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_squares)

    p = sub.add_parser("equations", help="generate the quadratic forms")
    _add_system(p)
    p.add_argument(
        "--kind", default="all", choices=["all", "pi2", "pi/2", "2pi3", "2pi/3", "pi"]
    )
    p.add_argument("--out", default="-", help="output file, '-' for stdout")
    p.set_defaults(func=cmd_equations)

    p = sub.add_parser("check", help="evaluate the forms on a vector file")
    _add_system(p)
    p.add_argument("--vector", required=True)
    p.add_argument("--equations", help="equation file from the equations subcommand")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orbit", help="check a word applied to a basis vector")
    _add_system(p)
    p.add_argument("--word", required=True, help="JSON file of [{rho, xi}] factors")
    p.add_argument("--rho", required=True, help="root coefficients as a JSON array")
    p.add_argument("--ring", default="int", help="int or zmod:<m>")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", help="run verification suites")
    _add_system(p)
    p.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--ring", action="append", help="may be repeated; words suite only")
    p.add_argument("--timing", action="store_true", help="include wall times in the report")
    p.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
