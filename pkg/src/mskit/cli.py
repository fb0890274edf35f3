"""Command line front end.

Exit codes: 0 success, 1 a check found failures, 2 invalid input or surface,
3 missing colour window, 4 unsupported surface, 5 unknown edge / missing arc
copy / crossing or invalid arc, 6 type A input errors, 7 quiver-with-potential
or theorem-check input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .errors import MskitError
from .harness import (
    check_cut_batch,
    check_flip_batch,
    check_flip_fz_batch,
    check_order_batch,
    check_theorem_batch,
    check_twist_batch,
)
from .qp import fz_mutate, gentle_check, qp_delete_vertex, qp_from_triangulation
from .quiver import check_theorem71, coloured_quiver, mutate, twist
from .typea import cross_check, d_from_quiver, typea_mutate


def parse_window(text: str | None):
    if text is None:
        return None
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like lo..hi, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError("window lower bound exceeds upper bound")
    return (lo, hi)


def parse_ids(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _default_seed() -> int:
    return int(os.environ.get("MSKIT_SEED", "0"))


def _emit(text: str, out: str | None) -> None:
    if out:
        io.write_text(out, text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _load_surface(path):
    return io.surface_from_json(io.read_json(path))


# -- commands -------------------------------------------------------------------

def cmd_validate(args) -> int:
    cls = _load_surface(args.surface).validate()
    print(cls)
    return 0


def cmd_quiver(args) -> int:
    Q = coloured_quiver(_load_surface(args.surface), args.window)
    if args.dot:
        io.write_text(args.dot, io.quiver_to_dot(Q))
    _emit(io.dumps(io.quiver_to_json(Q)), args.out)
    return 0


def cmd_mutate(args) -> int:
    cx = mutate(_load_surface(args.surface), args.vertex)
    _emit(io.dumps(io.surface_to_json(cx)), args.out)
    return 0


def cmd_twist(args) -> int:
    print(twist(_load_surface(args.surface), args.vertex, -1 if args.inverse else 1))
    return 0


def cmd_cut(args) -> int:
    cx = _load_surface(args.surface)
    result = cx.cut(parse_ids(args.arcs))
    result.validate()
    _emit(io.dumps(io.surface_to_json(result)), args.out)
    return 0


def cmd_flip(args) -> int:
    cx = _load_surface(args.surface).flip(args.edge)
    _emit(io.dumps(io.surface_to_json(cx)), args.out)
    return 0


def cmd_reglue(args) -> int:
    cx = _load_surface(args.surface).reglue(parse_ids(args.arcs))
    cx.validate()
    _emit(io.dumps(io.surface_to_json(cx)), args.out)
    return 0


def cmd_qp(args) -> int:
    if args.qp_cmd == "build":
        qp = qp_from_triangulation(_load_surface(args.surface))
        if args.dot:
            io.write_text(args.dot, io.qp_to_dot(qp))
        _emit(io.dumps(io.qp_to_json(qp)), args.out)
        return 0
    qp = io.qp_from_json(io.read_json(args.qp))
    if args.qp_cmd == "fz-mutate":
        Q = fz_mutate(qp.quiver, args.vertex)
        _emit(io.dumps(io.qp_to_json(io.plain_quiver_to_qp(Q))), args.out)
        return 0
    if args.qp_cmd == "delete":
        _emit(io.dumps(io.qp_to_json(qp_delete_vertex(qp, args.vertex))), args.out)
        return 0
    result = gentle_check(qp, qp.relations())
    print("gentle" if result.gentle else f"not gentle: {result.witness}")
    return 0 if result.gentle else 1


def cmd_typea(args) -> int:
    if args.typea_cmd == "cross-check":
        total_fail = 0
        for N in range(4, args.N + 1) if args.all else [args.N]:
            rep = cross_check(N)
            print(rep)
            total_fail += rep.failures
        return 0 if total_fail == 0 else 1
    Q = io.quiver_from_json(io.read_json(args.quiver))
    if args.typea_cmd == "d":
        print(d_from_quiver(Q, args.vertex))
        return 0
    _emit(io.dumps(io.quiver_to_json(typea_mutate(Q, args.vertex))), args.out)
    return 0


def cmd_check(args) -> int:
    what = args.check_cmd
    if what == "theorem71" and args.surface:
        cx = _load_surface(args.surface)
        Q = coloured_quiver(cx, args.window)
        Qt = coloured_quiver(mutate(cx, args.vertex), args.window)
        rep = check_theorem71(Q, Qt, args.vertex)
        print(rep)
        return 0 if rep.ok else 1
    runners = {
        "theorem71": lambda: check_theorem_batch(args.seed, args.count),
        "cut-subquiver": lambda: check_cut_batch(args.seed, args.count),
        "flip-fz": lambda: check_flip_fz_batch(args.seed, args.count),
        "order": lambda: check_order_batch(args.seed, args.count),
        "twist": lambda: check_twist_batch(args.seed, args.count),
        "flip": lambda: check_flip_batch(args.seed, args.count),
    }
    rep = runners[what]()
    data = rep.to_json()
    if not args.timing:
        data.pop("seconds")
    print(json.dumps(data, indent=2, default=str))
    return 0 if rep.ok else 1


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mskit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("validate", help="classify a surface file")
    s.add_argument("surface")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("quiver", help="coloured quiver of the partial triangulation")
    s.add_argument("surface")
    s.add_argument("--window", type=parse_window)
    s.add_argument("--dot")
    s.add_argument("--out")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("mutate", help="mutate the partial triangulation at an arc")
    s.add_argument("surface")
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("twist", help="print the twisted arc in its reduction chart")
    s.add_argument("surface")
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--inverse", action="store_true")
    s.set_defaults(func=cmd_twist)

    s = sub.add_parser("cut", help="cut along arcs")
    s.add_argument("surface")
    s.add_argument("--arcs", required=True, help="comma separated edge ids")
    s.add_argument("--out")
    s.set_defaults(func=cmd_cut)

    s = sub.add_parser("reglue", help="glue cut arcs back together")
    s.add_argument("surface")
    s.add_argument("--arcs", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_reglue)

    s = sub.add_parser("flip", help="flip an interior edge")
    s.add_argument("surface")
    s.add_argument("--edge", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_flip)

    s = sub.add_parser("qp", help="quivers with potential")
    qsub = s.add_subparsers(dest="qp_cmd", required=True)
    q = qsub.add_parser("build")
    q.add_argument("surface")
    q.add_argument("--dot")
    q.add_argument("--out")
    q = qsub.add_parser("fz-mutate")
    q.add_argument("qp")
    q.add_argument("--vertex", type=int, required=True)
    q.add_argument("--out")
    q = qsub.add_parser("delete")
    q.add_argument("qp")
    q.add_argument("--vertex", type=int, action="append", required=True)
    q.add_argument("--out")
    q = qsub.add_parser("gentle")
    q.add_argument("qp")
    s.set_defaults(func=cmd_qp)

    s = sub.add_parser("typea", help="combinatorial type A mutation")
    tsub = s.add_subparsers(dest="typea_cmd", required=True)
    t = tsub.add_parser("mutate")
    t.add_argument("quiver")
    t.add_argument("--vertex", type=int, required=True)
    t.add_argument("--out")
    t = tsub.add_parser("d")
    t.add_argument("quiver")
    t.add_argument("--vertex", type=int, required=True)
    t = tsub.add_parser("cross-check")
    t.add_argument("N", type=int)
    t.add_argument("--all", action="store_true", help="run every N from 4 up")
    s.set_defaults(func=cmd_typea)

    s = sub.add_parser("check", help="batch property checks")
    csub = s.add_subparsers(dest="check_cmd", required=True)
    for name in ("theorem71", "cut-subquiver", "flip-fz", "order", "twist", "flip"):
        c = csub.add_parser(name)
        c.add_argument("--seed", type=int, default=_default_seed())
        c.add_argument("--count", type=int, default=200)
        c.add_argument("--timing", action="store_true", help="include wall time in the report")
        if name == "theorem71":
            c.add_argument("--surface")
            c.add_argument("--vertex", type=int)
            c.add_argument("--window", type=parse_window)
    s.set_defaults(func=cmd_check)
    return p


def _join_window(argv: list[str]) -> list[str]:
    """Let ``--window -5..5`` through argparse, which would read -5..5 as a flag."""
    out = []
    skip = False
    for n, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if arg == "--window" and n + 1 < len(argv):
            out.append(f"--window={argv[n + 1]}")
            skip = True
        else:
            out.append(arg)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _join_window(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MskitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
