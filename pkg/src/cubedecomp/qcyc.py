"""QCYC: line-oriented text format for decompositions.

::

    qcyc 1
    n=<n> m=<m> cycles=<count> len=<2^m n>
    c <index> start=<hex mask> dirs=<d1,d2,...>
    m <index> pos=<p1,p2,...>
    ...

Indices are 1-based and each ``c`` line is followed by its ``m`` line.
Masks are lowercase hex without prefix (element j is bit j-1).  A leading
``# unverified`` line marks output built outside the verified envelope.
Reading checks structure only (counts, ranges, ordering), never the
mathematics; use ``verify`` for that.
"""

from __future__ import annotations

import io
import re
from typing import TextIO

from .errors import EmptyDecomposition, ParseError, SinkFailure, VersionMismatch
from .hypercube import CycleSpec, MAX_DIM
from .model import Decomposition

VERSION = 1
UNVERIFIED_MARK = "# unverified"

_HEADER = re.compile(r"n=(\d+) m=(\d+) cycles=(\d+) len=(\d+)")
_CYCLE = re.compile(r"c (\d+) start=([0-9a-f]+) dirs=(\d+(?:,\d+)*)")
_MATCH = re.compile(r"m (\d+) pos=(\d+(?:,\d+)*)")


def _join(values) -> str:
    return ",".join(str(v) for v in values)


def write_decomposition(dec: Decomposition, sink: TextIO) -> None:
    if not dec.cycles:
        raise EmptyDecomposition("refusing to write a decomposition without cycles")
    lines = []
    if dec.unverified:
        lines.append(UNVERIFIED_MARK)
    lines.append(f"qcyc {VERSION}")
    lines.append(f"n={dec.n} m={dec.m} cycles={len(dec.cycles)} len={dec.cycle_length}")
    for idx, (spec, positions) in enumerate(zip(dec.cycles, dec.matching_positions), start=1):
        lines.append(f"c {idx} start={spec.start:x} dirs={_join(spec.dirs)}")
        lines.append(f"m {idx} pos={_join(sorted(positions))}")
    try:
        sink.write("\n".join(lines) + "\n")
    except (OSError, ValueError) as exc:
        raise SinkFailure(str(exc)) from exc


def dumps(dec: Decomposition) -> str:
    buf = io.StringIO()
    write_decomposition(dec, buf)
    return buf.getvalue()


def read_decomposition(source: TextIO) -> Decomposition:
    text = source.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    cursor = 0

    def take(what: str) -> str:
        nonlocal cursor
        if cursor >= len(lines):
            raise ParseError(cursor + 1, f"unexpected end of input, expected {what}")
        cursor += 1
        return lines[cursor - 1]

    unverified = False
    first = take("header")
    if first == UNVERIFIED_MARK:
        unverified = True
        first = take("header")
    magic = first.split(" ")
    if len(magic) != 2 or magic[0] != "qcyc" or not magic[1].isdigit():
        raise ParseError(cursor, f"not a qcyc header: {first!r}")
    if int(magic[1]) != VERSION:
        raise VersionMismatch(cursor, f"version {magic[1]} is not supported (want {VERSION})")

    match = _HEADER.fullmatch(take("dimension line"))
    if not match:
        raise ParseError(cursor, "malformed dimension line")
    n, m, count, length = map(int, match.groups())
    if not 1 <= n <= MAX_DIM:
        raise ParseError(cursor, f"n={n} outside 1..{MAX_DIM}")
    if m < 1 or length != (1 << m) * n:
        raise ParseError(cursor, f"len={length} is not 2^m n for n={n}, m={m}")
    if count < 1:
        raise ParseError(cursor, "a decomposition needs at least one cycle")

    cycles = []
    positions = []
    for idx in range(1, count + 1):
        line = take(f"cycle {idx}")
        cm = _CYCLE.fullmatch(line)
        if not cm:
            raise ParseError(cursor, f"malformed cycle line: {line[:40]!r}")
        if int(cm.group(1)) != idx:
            raise ParseError(cursor, f"cycle index {cm.group(1)}, expected {idx}")
        start = int(cm.group(2), 16)
        if start >> n:
            raise ParseError(cursor, f"start mask {cm.group(2)} has bits beyond n={n}")
        dirs = tuple(int(d) for d in cm.group(3).split(","))
        if len(dirs) != length:
            raise ParseError(cursor, f"{len(dirs)} directions, expected {length}")
        if any(not 1 <= d <= n for d in dirs):
            raise ParseError(cursor, f"direction outside 1..{n}")
        line = take(f"matching for cycle {idx}")
        mm = _MATCH.fullmatch(line)
        if not mm:
            raise ParseError(cursor, f"malformed matching line: {line[:40]!r}")
        if int(mm.group(1)) != idx:
            raise ParseError(cursor, f"matching index {mm.group(1)}, expected {idx}")
        pos = tuple(int(p) for p in mm.group(2).split(","))
        if any(not 1 <= p <= length for p in pos):
            raise ParseError(cursor, f"position outside 1..{length}")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ParseError(cursor, "positions must be strictly ascending")
        cycles.append(CycleSpec(start, dirs, n))
        positions.append(pos)
    if cursor != len(lines):
        raise ParseError(cursor + 1, "trailing content after the last cycle")
    return Decomposition(n, m, tuple(cycles), tuple(positions), unverified)


def loads(text: str) -> Decomposition:
    return read_decomposition(io.StringIO(text))
