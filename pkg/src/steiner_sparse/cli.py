"""``steiner-sparse`` command line.

Exit codes: 0 success / all checks pass, 1 violations found, 2 usage or
format error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import constructions, counting, edgelist, verifier
from .errors import BudgetExceeded, DomainError, FormatError, UsageError
from .verifier import ForbiddenFamily

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _family(text):
    try:
        return ForbiddenFamily.parse(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _emit(args, data, text, stream=None):
    stream = stream or sys.stdout
    print(json.dumps(data, indent=2) if args.json else text, file=stream)


def cmd_generate(args) -> int:
    name = args.construction
    if name == "auto":
        if args.n is None:
            raise UsageError("--n is required for the auto construction")
        h, meta = constructions.build_auto(args.r, args.n, threads=args.threads)
    else:
        h, meta = constructions.build(name, args.r, n=args.n, m=args.m, d=args.d, threads=args.threads)
    text = edgelist.dumps(h, meta)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    report = counting.density_report(h, meta)
    summary = {"requested_n": meta.requested_n, "used_n": meta.used_n, "group": meta.group.token,
               **report.to_dict()}
    rendered = f"requested_n={meta.requested_n} used_n={meta.used_n} group={meta.group.token} " + report.render()
    _emit(args, summary, rendered, sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    h, header = edgelist.read(args.file)
    fams = args.forbid or verifier.default_families(h.r)
    reports = [verifier.check(h, fam, cap=args.cap, naive=args.naive, threads=args.threads) for fam in fams]
    passed = all(rep.passed for rep in reports)
    data = {"file": args.file, "r": h.r, "n": h.n, "edges": len(h), "passed": passed,
            "reports": [rep.to_dict(h) for rep in reports]}
    _emit(args, data, "\n".join(rep.render(h) for rep in reports))
    return EXIT_OK if passed else EXIT_VIOLATION


def cmd_stats(args) -> int:
    h, header = edgelist.read(args.file)
    report = counting.density_report(h, edgelist.meta_from_header(header))
    _emit(args, report.to_dict(), report.render())
    return EXIT_OK


def cmd_oracle(args) -> int:
    fams = args.forbid or verifier.default_families(args.r)
    best, witness = verifier.max_search(args.r, args.n, fams)
    text = edgelist.dumps(witness)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json:
        _emit(args, {"r": args.r, "n": args.n, "families": [[f.v, f.e] for f in fams],
                     "max_edges": best, "witness": [list(e) for e in witness]}, "")
    else:
        print(f"max_edges={best}")
        if not args.out:
            sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="steiner-sparse", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a construction and write its edge list")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--construction", choices=["auto", *constructions.NAMES], default="auto")
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--out", help="output path (default: stdout, summary goes to stderr)")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--json", action="store_true", help="machine-readable summary")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check an edge-list file for forbidden configurations")
    p.add_argument("file")
    p.add_argument("--forbid", type=_family, action="append", metavar="V,E",
                   help="family F(v,e); repeatable; default (r+1,2) and (r+2,3)")
    p.add_argument("--naive", action="store_true", help="use the unpruned reference checker")
    p.add_argument("--cap", type=_positive, default=verifier.DEFAULT_CAP, help="certificates kept per family")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="edge counts and density of an edge-list file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("oracle", help="exact extremal number of a tiny instance")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", type=_family, action="append", metavar="V,E")
    p.add_argument("--out", help="write the witness edge list here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, FormatError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
