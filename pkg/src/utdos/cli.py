"""Command-line interface: ``utdos decide|g|modtable|verify|selfcheck``.

Exit codes: 0 success / representable, 1 not representable, 2 usage error,
3 internal mismatch (a bug, not a user error).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import classify, modtables, oracle, selfcheck
from .errors import NotRepresentable, ResourceError
from .matrix import UTMat, verify_witness

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3


def _triple(text: str) -> UTMat:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    if len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated integers, got {text!r}")
    return UTMat(*vals)


def cmd_decide(args) -> int:
    T = UTMat(args.p, args.r, args.q)
    v = classify.decide(T, witness=args.witness)
    if args.json:
        print(json.dumps(classify.verdict_to_json(v)))
    elif v.representable:
        print(f"{T} is representable (g = {v.g}, case {v.case.kind.value})")
        if v.witness is not None:
            print(f"A = {v.witness.A}")
            print(f"B = {v.witness.B}")
    else:
        print(f"{T} is not representable ({v.obstruction.value})")
    return EXIT_OK if v.representable else EXIT_NO


def cmd_g(args) -> int:
    try:
        m = classify.m_of(args.p, args.q)
    except NotRepresentable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    print(m)
    if args.brute is not None:
        g = oracle.brute_g(args.p, args.q, args.brute)
        flag = "MATCH" if g == m else "MISMATCH"
        print(f"brute_g = {g} {flag}")
        if g != m:
            return EXIT_BUG
    return EXIT_OK


def cmd_modtable(args) -> int:
    try:
        table = modtables.representable_mod(args.m, workers=args.workers)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    data = modtables.emit_table(table, args.format, args.diag_multiple)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())
    filtered = table.filtered(args.diag_multiple)
    print(f"representable: {len(filtered)}, not representable: {len(filtered.complement())}",
          file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = verify_witness(args.a, args.b, args.t)
    print("OK" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_NO


def cmd_selfcheck(args) -> int:
    report = selfcheck.run(args.bound, workers=args.workers, zero_bound=args.zero_bound)
    print(f"box |p|,|q|,|r| <= {args.bound}: {report.cases} cases")
    for name in selfcheck.BRANCHES + ("not_representable",):
        print(f"  {name:22s} {report.branches[name]}")
    for w in report.warnings:
        print(f"warning: {w}")
    if not report.ok:
        print(f"MISMATCH: {report.failures[0]}")
        return EXIT_BUG
    print("all checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="utdos",
        description="Differences of squares of upper-triangular 2x2 integer matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether [[p, r], [0, q]] = A^2 - B^2")
    p.add_argument("p", type=int)
    p.add_argument("r", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--witness", action="store_true", help="include a verified (A, B)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("g", help="print g(p, q), the modulus the corner must be divisible by")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--brute", type=int, metavar="ZERO_BOUND",
                   help="cross-check against the brute-force minimum")
    p.set_defaults(func=cmd_g)

    p = sub.add_parser("modtable", help="table of A^2 - B^2 in UT_2(Z_m)")
    p.add_argument("m", type=int)
    p.add_argument("--diag-multiple", type=int, default=None, metavar="D")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_modtable)

    p = sub.add_parser("verify", help="check A^2 - B^2 = T (use --a=-1,0,2 for a leading minus)")
    p.add_argument("--a", type=_triple, required=True, metavar="a,b,d")
    p.add_argument("--b", type=_triple, required=True, metavar="x,y,u")
    p.add_argument("--t", type=_triple, required=True, metavar="p,r,q")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selfcheck", help="cross-validate classifier and oracle on a box")
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--zero-bound", type=int, default=8)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
