"""
Command line front end.

    webperm enumerate {web,tilde-web,delta,andre,updown} N [--format lines|json]
    webperm table {seidel,entringer,f,b-plus,gamma,d} N [--format csv|json]
    webperm verify SUITE [--max-n 8] [--max-chords 6] [--threads 1] [--no-timing]

Data goes to stdout, diagnostics to stderr. Exit status: 0 success,
1 verification failure, 2 usage or cap error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import chord, gamma, grid, perms, seq
from .config import Caps
from .errors import PreconditionError, SizeError
from .verify import SUITES, run_suite

HARD_MAX_N = 10
HARD_MAX_CHORDS = 9


def _caps(args) -> Caps:
    if not args.unsafe_no_cap:
        if args.max_n > HARD_MAX_N:
            raise SizeError(f"--max-n above {HARD_MAX_N} needs --unsafe-no-cap")
        if args.max_chords > HARD_MAX_CHORDS:
            raise SizeError(f"--max-chords above {HARD_MAX_CHORDS} needs --unsafe-no-cap")
    return Caps(max_n=args.max_n, max_chords=args.max_chords, unbounded=args.unsafe_no_cap)


def enumerate_kind(kind: str, n: int, caps: Caps) -> list[perms.Word]:
    caps.check_n(n)
    if kind == "web":
        return sorted(grid.web_set(n, caps))
    if kind == "tilde-web":
        return grid.tilde_web(n, caps)
    filters = {"delta": perms.is_cycle_up_down, "andre": perms.is_andre, "updown": perms.is_up_down}
    return [p for p in perms.enumerate_perms(n, caps) if filters[kind](p)]


def table_rows(kind: str, bound: int, caps: Caps, classical: bool = False) -> list[tuple[int, int, object]]:
    rows: list[tuple[int, int, object]] = []
    if kind == "seidel":
        for i in range(1, bound + 1):
            rows += [(i, j, v) for j, v in enumerate(seq.seidel_row(i), start=1)]
    elif kind == "entringer":
        for n in range(0, bound + 1):
            rows += [(n, k, v) for k, v in enumerate(seq.entringer_row(n))]
    elif kind == "f":
        caps.check_n(bound)
        for n in range(1, bound + 1):
            rows += [(n, k, grid.f(n, k, caps)) for k in range(1, n + 1)]
    elif kind == "b-plus":
        caps.check_chords(bound + 1)
        for n in range(0, bound + 1):
            rows += [(n, k, chord.b_plus(n, k, caps)) for k in range(n + 1)]
    elif kind == "gamma":
        caps.check_n(bound)
        for n in range(1, bound + 1):
            p = gamma.eulerian(n, caps) if classical else gamma.at_eulerian(n, caps)
            rows += [(n, i, str(g)) for i, g in enumerate(gamma.gamma_expand(p, n))]
    elif kind == "d":
        caps.check_n(bound - 1)
        for n in range(1, bound + 1):
            ds = [gamma.d_web(n, i, caps) for i in range((n - 1) // 2 + 1)]
            if classical:
                ds = [d.subs(t=1, alpha=1) for d in ds]
            rows += [(n, i, str(d)) for i, d in enumerate(ds)]
    else:
        raise PreconditionError(f"unknown table {kind}")
    return rows


def _write_table(rows, fmt: str, out) -> None:
    if fmt == "json":
        json.dump([{"i": i, "j": j, "value": v} for i, j, v in rows], out)
        out.write("\n")
    else:
        out.write("i,j,value\n")
        for i, j, v in rows:
            out.write(f"{i},{j},{v}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="webperm", description=__doc__.split("\n\n")[0].strip())
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=8)
    common.add_argument("--max-chords", type=int, default=6)
    common.add_argument("--unsafe-no-cap", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list a family of permutations")
    p.add_argument("kind", choices=["web", "tilde-web", "delta", "andre", "updown"])
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["lines", "json"], default="lines")

    p = sub.add_parser("table", parents=[common], help="print a number table")
    p.add_argument("kind", choices=["seidel", "entringer", "f", "b-plus", "gamma", "d"])
    p.add_argument("bound", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--classical", action="store_true", help="gamma/d: specialize t = alpha = 1")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-identical output")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        caps = _caps(args)
        if args.command == "enumerate":
            if args.n < 0:
                raise PreconditionError("n must be nonnegative")
            words = enumerate_kind(args.kind, args.n, caps)
            if args.format == "json":
                json.dump([list(w) for w in words], out)
                out.write("\n")
            else:
                for w in words:
                    out.write(perms.format_word(w) + "\n")
            return 0
        if args.command == "table":
            _write_table(table_rows(args.kind, args.bound, caps, args.classical), args.format, out)
            return 0
        report = run_suite(args.suite, args.max_n, args.max_chords, args.threads)
        if args.no_timing:
            report.elapsed_ms = 0
        out.write(report.to_json() + "\n")
        failed = [c["id"] for c in report.checks if c["status"] == "fail"]
        for cid in failed:
            print(f"FAIL {cid}", file=sys.stderr)
        return 0 if report.passed else 1
    except (SizeError, PreconditionError) as exc:
        print(f"webperm: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
