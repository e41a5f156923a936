"""Command-line interface.

Every subcommand accepts ``--format plain|csv|json``, ``--precision`` (decimal
places for reals, default 4) and ``--max-n`` (largest sieve the command may
build; default 2,000,000 or $SPSEQ_MAX_N).

Exit codes: 0 success, 1 computation/range error, 2 usage error.
"""

import argparse
import json
import os
import sys

from . import analytics, core, farey, harmonic
from .errors import SpError

DEFAULT_MAX_N = 2_000_000


def _max_n(args):
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("SPSEQ_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _sieve(args, need):
    cap = _max_n(args)
    if need > cap:
        raise SpError(f"requested {need} exceeds sieve capability {cap} (raise --max-n)")
    return core.build_sieve(max(need, 2))


def _checkpoints(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad checkpoint list {text!r}")


class Out:
    """Collects a table and renders it in the requested format."""

    def __init__(self, args):
        self.fmt = args.format
        self.places = args.precision

    def real(self, x):
        return f"{x:.{self.places}f}"

    def table(self, header, rows, plain=None):
        if self.fmt == "csv":
            lines = [",".join(header)] + [",".join(self._cell(c) for c in r) for r in rows]
            return "\n".join(lines) + "\n"
        if self.fmt == "json":
            recs = [dict(zip(header, (self._json(c) for c in r))) for r in rows]
            return json.dumps(recs, sort_keys=True) + "\n"
        if plain is not None:
            return plain
        lines = ["  ".join(header)] + ["  ".join(self._cell(c) for c in r) for r in rows]
        return "\n".join(lines) + "\n"

    def _cell(self, c):
        if c is None:
            return ""
        if isinstance(c, float):
            return self.real(c)
        return str(c)

    def _json(self, c):
        if isinstance(c, float):
            return float(self.real(c))
        return c


def cmd_list(args, out):
    sv = _sieve(args, args.limit)
    rows = [(s.value, s.p, s.a) for s in core.enumerate_sp(args.limit, sv)]
    return out.table(("value", "p", "a"), rows)


def cmd_harmonic(args, out):
    if args.table is not None:
        pts = args.table or list(harmonic.DEFAULT_CHECKPOINTS)
        sv = _sieve(args, max(pts))
        rows = harmonic.reproduce_table(pts, sv)
        return out.table(
            ("X", "sp_harmonic", "estimate_main_term"),
            [(r.X, r.actual, r.estimate) for r in rows],
        )
    sv = _sieve(args, args.limit)
    value = harmonic.sp_harmonic(args.limit, sv)
    return out.table(("k", "sp_harmonic"), [(args.limit, value)], plain=out.real(value) + "\n")


def cmd_farey(args, out):
    sv = _sieve(args, args.limit)
    if args.count_only:
        n = farey.sp_farey_count(args.limit, sv)
        return out.table(("x", "count"), [(args.limit, n)], plain=f"{n}\n")
    entries = farey.sp_farey(args.limit, sv, order=args.order)
    rows = [(e.num.value, e.den.value, e.value) for e in entries]
    plain = "".join(f"{e}  {out.real(e.value)}\n" for e in entries)
    return out.table(("num", "den", "value"), rows, plain=plain)


def cmd_equidist(args, out):
    if args.grid < 1:
        raise SpError("--grid must be >= 1")
    sv = _sieve(args, args.j)
    d = analytics.star_discrepancy(args.j, sv)
    g = args.grid
    rows = []
    for i in range(g + 1):
        for k in range(i + 1, g + 1):
            frac = analytics.interval_fraction(args.j, analytics.Interval(i / g, k / g), sv)
            rows.append((args.j, i / g, k / g, float(frac), d))
    plain = "".join(
        f"fraction[{out.real(r[1])},{out.real(r[2])}] = {out.real(r[3])}\n" for r in rows
    ) + f"star_discrepancy = {out.real(d)}\n"
    return out.table(("j", "alpha", "beta", "fraction", "star_discrepancy"), rows, plain=plain)


def cmd_twins(args, out):
    sv = _sieve(args, args.limit)
    if args.harmonic:
        value = harmonic.twin_harmonic(args.limit, sv)
        return out.table(("limit", "twin_harmonic"), [(args.limit, value)], plain=out.real(value) + "\n")
    rows = [(t.lo.value, t.hi.value) for t in core.find_twins(args.limit, sv)]
    return out.table(("lo", "hi"), rows)


def cmd_count(args, out):
    sv = _sieve(args, args.limit)
    n = analytics.sp_count(args.limit, sv)
    if not args.compare:
        return out.table(("limit", "count"), [(args.limit, n)], plain=f"{n}\n")
    rep = analytics.count_report([args.limit], sv)[0]
    return out.table(
        ("checkpoint", "empirical", "estimate", "ratio"),
        [(rep.checkpoint, n, rep.estimate, rep.ratio)],
    )


def cmd_digits(args, out):
    sv = _sieve(args, args.limit)
    census = analytics.digit_census(args.limit, sv)
    if not args.estimate:
        return out.table(("digit", "count"), list(enumerate(census.counts)))
    est = analytics.digit1_estimate(args.limit)
    rows = [(d, c, est if d == 1 else None) for d, c in enumerate(census.counts)]
    return out.table(("digit", "count", "estimate"), rows)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--precision", type=int, default=4, help="decimal places for reals")
    common.add_argument("--max-n", type=int, default=None, help="sieve capability (env SPSEQ_MAX_N)")

    parser = argparse.ArgumentParser(prog="spseq", description="Square-prime number toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", parents=[common], help="SP numbers with (p, a)")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("harmonic", parents=[common], help="SP harmonic sums")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--table", type=_checkpoints, nargs="?", const=[], metavar="X1,X2,...")
    g.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("farey", parents=[common], help="coprime SP pairs")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--order", choices=farey.ORDERS, default="lex")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("equidist", parents=[common], help="equidistribution of sp/j")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--grid", type=int, default=2)
    p.set_defaults(func=cmd_equidist)

    p = sub.add_parser("twins", parents=[common], help="consecutive SP pairs")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--harmonic", action="store_true")
    p.set_defaults(func=cmd_twins)

    p = sub.add_parser("count", parents=[common], help="SP counting function")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--compare", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("digits", parents=[common], help="last-digit census")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--estimate", action="store_true")
    p.set_defaults(func=cmd_digits)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args, Out(args))
    except (SpError, ValueError, MemoryError) as exc:
        print(f"spseq: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
