"""Lifting a decomposition with matching from Q_{n-2} to Q_n.

Q_n is four copies of Q_{n-2} tagged by their values on the two new
coordinates ``n-1`` and ``n``; copy ``p`` is joined to copy ``p+1 (mod 4)``
by the matching of corresponding vertices.  Each source cycle ``C`` yields
four cycles ``Z_p``: walk ``C`` inside copy ``p`` and, at every matching edge
``(x, y)``, detour ``x^p -> x^q -> y^q -> y^p`` with ``q = p+1 (mod 4)``.  The
copy-``q`` matching edges become the new matching.
"""

from __future__ import annotations

from .errors import ElementOutOfRange, PreconditionViolation
from .hypercube import CycleSpec, format_vertex
from .model import Decomposition
from .verify import verify_matching

# copy p -> tag on (element n-1, element n); consecutive tags differ in one bit
COPY_TAGS = ((0, 0), (1, 0), (1, 1), (0, 1))


def copy_code(p: int, n: int) -> int:
    if p not in (1, 2, 3, 4):
        raise ValueError(f"copy index {p} outside 1..4")
    low, high = COPY_TAGS[p - 1]
    return (low << (n - 2)) | (high << (n - 1))


def embed_copy(v: int, p: int, n: int) -> int:
    """Image of a Q_{n-2} vertex in copy ``p`` of Q_n."""
    if v < 0 or v >> (n - 2):
        raise ElementOutOfRange(f"{format_vertex(v)} is not a vertex of Q_{n - 2}")
    return v | copy_code(p, n)


def cross_direction(p: int, n: int) -> int:
    """Direction of the matching edges from copy ``p`` to copy ``p+1 (mod 4)``."""
    q = p % 4 + 1
    diff = copy_code(p, n) ^ copy_code(q, n)
    return diff.bit_length()


def _check_input(dec: Decomposition) -> None:
    n = dec.n
    count = len(dec.matching_positions[0]) if dec.matching_positions else 0
    if len(dec.matching_positions) != len(dec.cycles) or count == 0:
        raise PreconditionViolation("every cycle needs matching positions")
    for idx, (spec, positions) in enumerate(zip(dec.cycles, dec.matching_positions), start=1):
        if len(spec.dirs) != count * n:
            raise PreconditionViolation(f"cycle {idx} has length {len(spec.dirs)}, want {count * n}")
        ps = sorted(positions)
        if len(ps) != count or any(b - a != n for a, b in zip(ps, ps[1:])):
            raise PreconditionViolation(f"cycle {idx}: positions {ps} are not spaced by {n}")
    rep = verify_matching(dec)
    if not rep.ok:
        raise PreconditionViolation("matching is not perfect: " + "; ".join(rep.lines()))


def lift_cycle(spec: CycleSpec, positions, p: int, n: int) -> tuple[CycleSpec, tuple[int, ...]]:
    """``Z_p`` for one source cycle, with its new matching positions."""
    cross = cross_direction(p, n)
    marks = set(positions)
    dirs: list[int] = []
    new_positions = []
    for pos, d in enumerate(spec.dirs, start=1):
        if pos in marks:
            dirs.append(cross)
            dirs.append(d)
            new_positions.append(len(dirs))
            dirs.append(cross)
        else:
            dirs.append(d)
    return CycleSpec(embed_copy(spec.start, p, n), tuple(dirs), n), tuple(new_positions)


def lift_decomposition(dec: Decomposition, check: bool = True) -> Decomposition:
    if check:
        _check_input(dec)
    n = dec.n + 2
    cycles = []
    positions = []
    for spec, marks in zip(dec.cycles, dec.matching_positions):
        for p in (1, 2, 3, 4):
            z, new = lift_cycle(spec, marks, p, n)
            cycles.append(z)
            positions.append(new)
    return Decomposition(n, dec.m, tuple(cycles), tuple(positions), dec.unverified)
