"""Command-line front end.

Exit codes: 0 success, 1 verification or golden mismatch, 2 bad input.
Data goes to standard output (or ``--out``); diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import qcyc, reference_q8
from .decompose import DEFAULT_MAX_N, decompose, path_decomposition
from .errors import DecompositionError, ParseError
from .hypercube import MAX_DIM
from .model import Decomposition
from .mollard_ramras import two_n_cycle_decomposition
from .verify import verify_decomposition


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _report_findings(rep) -> None:
    for line in rep.lines():
        _err(line)
    for s in rep.skipped:
        _err(f"skipped: {s}")


def _read(path: str) -> Decomposition:
    if path == "-":
        return qcyc.read_decomposition(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return qcyc.read_decomposition(fh)


def cmd_decompose(args) -> int:
    limit = MAX_DIM if args.force else DEFAULT_MAX_N
    try:
        dec = decompose(args.n, args.m, limit=limit)
    except DecompositionError as exc:
        _err(f"error: {exc}")
        return 2
    if args.force and args.n > DEFAULT_MAX_N and not dec.unverified:
        dec = Decomposition(dec.n, dec.m, dec.cycles, dec.matching_positions, unverified=True)
    if dec.unverified:
        _err("warning: output built beyond the resource cap is marked unverified")
    if args.verify:
        rep = verify_decomposition(dec)
        if not rep.ok:
            _report_findings(rep)
            return 1
        for s in rep.skipped:
            _err(f"skipped: {s}")
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                qcyc.write_decomposition(dec, fh)
        else:
            qcyc.write_decomposition(dec, sys.stdout)
    except OSError as exc:
        _err(f"error: {exc}")
        return 2
    except DecompositionError as exc:
        _err(f"error: {exc}")
        return 2
    return 0


def cmd_verify(args) -> int:
    try:
        dec = _read(args.file)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return 2
    except OSError as exc:
        _err(f"error: {exc}")
        return 2
    rep = verify_decomposition(dec)
    if not rep.ok:
        _report_findings(rep)
        return 1
    for s in rep.skipped:
        _err(f"skipped: {s}")
    print(f"OK n={dec.n} m={dec.m} cycles={len(dec.cycles)}")
    return 0


def cmd_paths(args) -> int:
    try:
        dec = _read(args.file)
        paths = path_decomposition(dec, args.len)
    except (OSError, DecompositionError) as exc:
        _err(f"error: {exc}")
        return 2
    out = [f"paths n={paths.n} len={paths.r} count={len(paths.paths)}"]
    for idx, p in enumerate(paths.paths, start=1):
        out.append(f"p {idx} " + ",".join(f"{v:x}" for v in p))
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_mollard(args) -> int:
    try:
        cycles = two_n_cycle_decomposition(args.n)
    except DecompositionError as exc:
        _err(f"error: {exc}")
        return 2
    out = [f"mollard n={args.n} cycles={len(cycles)} len={2 * args.n}"]
    for idx, c in enumerate(cycles, start=1):
        out.append(f"c {idx} start={c.start:x} dirs=" + ",".join(map(str, c.dirs)))
    sys.stdout.write("\n".join(out) + "\n")
    return 0


def cmd_appendix_q8(args) -> int:
    rows = reference_q8.construction_tables()
    sys.stdout.write("".join(r.line() + "\n" for r in rows))
    if not args.check:
        return 0
    mismatches = reference_q8.compare(reference_q8.corrected_tables())
    for mm in mismatches:
        _err(mm.line())
    if mismatches:
        return 1
    _err(f"golden tables match ({len(rows)} edges, {len(reference_q8.TYPOS)} documented typos)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubedecomp",
        description="Decompose Q_n into 2^m n-cycles carrying a perfect matching.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="build a decomposition and write it as QCYC")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--verify", action="store_true", help="run the full checker before writing")
    p.add_argument("--force", action="store_true",
                   help=f"allow n > {DEFAULT_MAX_N}; output is marked unverified")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="re-check a QCYC file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paths", help="split every cycle of a QCYC file into paths")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("mollard", help="2n-cycle decomposition of Q_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_mollard)

    p = sub.add_parser("appendix-q8", help="print the Q_8 matching-edge tables")
    p.add_argument("--check", action="store_true", help="compare with the embedded golden tables")
    p.set_defaults(func=cmd_appendix_q8)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
