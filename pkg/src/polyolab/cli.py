"""Command line front end.

Subcommands: enum (stream objects), stat (single statistics and
encodings), frob (characters in a chosen basis), verify (run registry
checks), series (coefficient tables).  Exit codes: 0 success, 2 usage
or parse error, 3 a degree or size cap was exceeded, 4 verification
failure (a theorem point compared unequal, or any point disagreed with
its documented outcome under --strict).

Caps are flags on the top level, before the subcommand: --cap-brute
bounds the sizes enumeration-backed commands will touch, --cap-generic
and --cap-special bound the operator calculus.  The enum footer always
reports the full count; --limit only truncates the printed records.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import macdonald
from . import registry
from .symfunc import CapExceeded, Composition
from .polyomino import (
    LatticePath,
    Polyomino,
    dinv,
    enum_doubly,
    enum_labelled,
    enum_paths,
    enum_polyominoes,
    to_aword,
    to_motzkin,
)
from .characters import (
    bounce_area_brute,
    frob_L,
    frob_L2,
    frob_L2star,
    frob_L_q,
    frob_labelled_paths,
    ribbon_frob,
    s_rho_coefficient,
)
from .sl2 import hilbert, littlewood_frob


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------
# literal parsing with position diagnostics

_PATH_LETTERS = set("ENXYenxy \t")


def _check_path_segment(seg, offset):
    for i, ch in enumerate(seg):
        if ch not in _PATH_LETTERS:
            raise UsageError("bad path letter %r at position %d"
                             % (ch, offset + i))


def _check_label_segment(seg, offset):
    if not (seg.startswith("[") and seg.endswith("]")):
        raise UsageError("label block starting at position %d must look "
                         "like [1,3,2]" % (offset,))
    for i, ch in enumerate(seg):
        if ch not in "[]0123456789, ":
            raise UsageError("bad label character %r at position %d"
                             % (ch, offset + i))


def _parse_polyomino(literal):
    parts = literal.split("|")
    if len(parts) != 2:
        raise UsageError("polyomino literal must be upper|lower")
    offset = 0
    for seg in parts:
        _check_path_segment(seg, offset)
        offset += len(seg) + 1
    try:
        return Polyomino(parts[0], parts[1])
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_path(literal):
    _check_path_segment(literal, 0)
    return LatticePath(literal)


def cmd_stat(args):
    literal = args.literal
    if args.stat == "area":
        obj = (_parse_polyomino(literal) if "|" in literal
               else _parse_path(literal))
        print(obj.area())
    elif args.stat == "gamma":
        if "|" in literal:
            print(Composition(_parse_polyomino(literal).gamma()).text())
        else:
            print(_parse_path(literal).runs_n().text())
    elif args.stat == "dinv":
        print(dinv(_parse_polyomino(literal)))
    elif args.stat == "aword":
        print(to_aword(_parse_polyomino(literal)).text())
    else:
        print(to_motzkin(_parse_polyomino(literal)).text())
    return 0


# ----------------------------------------------------------------------
# enumeration

_ENUM_KINDS = {
    "paths": lambda k, n: enum_paths(k, n),
    "polyominoes": lambda k, n: enum_polyominoes(k, n),
    "labelled": lambda k, n: enum_labelled(k, n),
    "doubly": lambda k, n: enum_doubly(k, n),
    "star": lambda k, n: enum_doubly(k, n, star=True),
}


def cmd_enum(args):
    cap = args.cap_brute
    if args.k > cap or args.n > cap:
        raise CapExceeded(max(args.k, args.n), cap)
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be nonnegative")
    shown = []
    count = 0
    for obj in _ENUM_KINDS[args.kind](args.k, args.n):
        if args.limit is None or count < args.limit:
            shown.append(obj.text())
        count += 1
    if args.format == "json":
        print(json.dumps({"records": shown, "count": count}))
    else:
        for line in shown:
            print(line)
        print("count=%d" % count)
    return 0


# ----------------------------------------------------------------------
# characters

def cmd_frob(args):
    cap = args.cap_brute
    k, n = args.a, args.b
    graded_ok = args.which in ("paths", "L2", "srho")
    if args.graded and not graded_ok:
        raise UsageError("--graded is not available for %r" % (args.which,))
    if args.which in ("Lq", "ribbon", "L2") and max(k, n) > cap:
        raise CapExceeded(max(k, n), cap)
    if args.which == "paths":
        f = frob_labelled_paths(k, n, graded=args.graded)
    elif args.which == "L":
        f = frob_L(k, n)
    elif args.which == "Lq":
        f = frob_L_q(k, n)
    elif args.which == "L2":
        f = frob_L2(k, n, graded=args.graded)
    elif args.which == "L2star":
        f = frob_L2star(k, n)
    elif args.which == "ribbon":
        f = ribbon_frob(k, n)
    elif args.which == "srho":
        f = s_rho_coefficient(k, n, graded=args.graded)
    else:
        f = littlewood_frob(k, n)
    if args.which in ("L2", "L2star"):
        if args.basis not in (None, "s"):
            raise UsageError("two-alphabet characters print in the Schur "
                             "basis only")
        print(f.text())
    else:
        print(f.text(args.basis or "h"))
    return 0


# ----------------------------------------------------------------------
# verification

def cmd_verify(args):
    if args.all:
        ids = None
    elif args.ids:
        ids = args.ids
    else:
        raise UsageError("give identity ids or --all")
    report = registry.verify(ids=ids, max_k=args.max_k, max_n=args.max_n,
                             mode=args.mode, threads=args.threads)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for rec in report["records"]:
            ptxt = " ".join("%s=%d" % (name, value)
                            for name, value in rec["params"].items())
            flag = "" if rec["equal"] == rec["expected"] else "  <- unexpected"
            print("%-14s %-12s %-20s equal=%s%s"
                  % (rec["id"], rec["status"], ptxt,
                     str(rec["equal"]).lower(), flag))
        print("points=%d unexpected=%d theorem_failures=%d mode=%s"
              % (report["points"], report["unexpected"],
                 report["theorem_failures"], report["mode"]))
    if not report["ok"]:
        return 4
    if args.strict and not report["ok_strict"]:
        return 4
    return 0


# ----------------------------------------------------------------------
# series tables

def _compact_q(rat):
    """Ascending rendering like 6+6q+5q^2 for a q-only polynomial value."""
    if rat.den != rat.den.one():
        raise ValueError("not a polynomial value")
    p = rat.num
    if p.tdeg() > 0:
        raise ValueError("value involves the second parameter")
    if not p.terms:
        return "0"
    pieces = []
    for (qe, _), c in sorted(p.terms.items()):
        if qe == 0:
            pieces.append(str(c))
        else:
            var = "q" if qe == 1 else "q^%d" % qe
            pieces.append(var if c == 1 else "%s%s" % (c, var))
    return "+".join(pieces)


def _xy_label(k, n):
    xs = "x" if k == 1 else "x^%d" % k
    ys = "y" if n == 1 else "y^%d" % n
    return "%s*%s" % (xs, ys)


def cmd_series(args):
    if args.which == "Pxy":
        trunc = 6 if args.trunc is None else args.trunc
        if trunc > 12:
            raise CapExceeded(trunc, 12)
        for total in range(2, trunc + 1):
            for k in range(1, total):
                cell = bounce_area_brute(k, total - k)
                print("%-9s: %s" % (_xy_label(k, total - k),
                                    _compact_q(cell)))
    elif args.which == "labelledGF":
        if args.a is None:
            raise UsageError("labelledGF needs the label bound k")
        k = args.a
        trunc = 8 if args.trunc is None else args.trunc
        if k < 1 or trunc < 1:
            raise UsageError("need k >= 1 and a positive truncation")
        # x/(1 - kx)^k by repeated truncated convolution
        geo = [k ** m for m in range(trunc)]
        series = [1] + [0] * (trunc - 1)
        for _ in range(k):
            series = [sum(series[i] * geo[m - i] for i in range(m + 1))
                      for m in range(trunc)]
        for n in range(1, trunc + 1):
            print("x^%-2d: %d" % (n, series[n - 1]))
    else:
        if args.a is None:
            raise UsageError("hilbert needs the matrix width n")
        trunc = 10 if args.trunc is None else args.trunc
        basis, closed = hilbert(args.a, trunc)
        print("basis : %s" % ", ".join(str(c) for c in basis))
        print("closed: %s" % ", ".join(str(c) for c in closed))
        print("match=%s" % str(basis == closed).lower())
    return 0


# ----------------------------------------------------------------------
# parser

def _build_parser():
    top = argparse.ArgumentParser(
        prog="polyolab",
        description="Exact enumeration, characters, and identity checks "
                    "for parallelogram polyominoes.")
    top.add_argument("--cap-brute", type=int, default=6, metavar="N",
                     help="largest side enumeration-backed commands accept "
                          "(default 6)")
    top.add_argument("--cap-generic", type=int,
                     default=macdonald.GENERIC_CAP, metavar="N",
                     help="degree cap for two-parameter operators "
                          "(default %d)" % macdonald.GENERIC_CAP)
    top.add_argument("--cap-special", type=int,
                     default=macdonald.SPECIAL_CAP, metavar="N",
                     help="degree cap for specialized operators "
                          "(default %d)" % macdonald.SPECIAL_CAP)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="stream objects of one kind")
    p.add_argument("kind", choices=sorted(_ENUM_KINDS))
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--limit", type=int, default=None,
                   help="print at most this many records; the count footer "
                        "still reports the full total")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("stat", help="one statistic or encoding of a literal")
    p.add_argument("stat", choices=("area", "dinv", "gamma", "aword",
                                    "motzkin"))
    p.add_argument("literal",
                   help="path word like NNEE, or polyomino upper|lower")
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("frob", help="character of a labelled family")
    p.add_argument("which", choices=("paths", "L", "Lq", "L2", "L2star",
                                     "ribbon", "srho", "littlewood"))
    p.add_argument("a", type=int,
                   help="k for most families, r for srho, d for littlewood")
    p.add_argument("b", type=int, help="n")
    p.add_argument("--basis", choices=("p", "h", "e", "s", "m"),
                   default=None, help="output basis (default h)")
    p.add_argument("--graded", action="store_true",
                   help="keep the area grading (paths, L2, srho)")
    p.set_defaults(func=cmd_frob)

    p = sub.add_parser("verify", help="run identity checks from the registry")
    p.add_argument("ids", nargs="*", metavar="id")
    p.add_argument("--all", action="store_true")
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--mode", choices=("symbolic", "evaluation"),
                   default="symbolic")
    p.add_argument("--strict", action="store_true",
                   help="fail when any point disagrees with its documented "
                        "outcome, whatever its status")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE",
                   help="also write the JSON report to FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="coefficient tables")
    p.add_argument("which", choices=("Pxy", "labelledGF", "hilbert"))
    p.add_argument("a", type=int, nargs="?", default=None,
                   help="k for labelledGF, n for hilbert")
    p.add_argument("--trunc", type=int, default=None)
    p.set_defaults(func=cmd_series)
    return top


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    saved = (macdonald.GENERIC_CAP, macdonald.SPECIAL_CAP)
    macdonald.GENERIC_CAP = args.cap_generic
    macdonald.SPECIAL_CAP = args.cap_special
    try:
        return args.func(args)
    except CapExceeded as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 3
    except UsageError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2
    finally:
        macdonald.GENERIC_CAP, macdonald.SPECIAL_CAP = saved


if __name__ == "__main__":
    sys.exit(main())
