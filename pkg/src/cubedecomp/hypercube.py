"""Vertex, edge and cycle model of the n-cube Q_n.

A vertex of Q_n is a subset of ``[n] = {1, ..., n}`` stored as an integer
bitmask: element ``j`` lives in bit ``j - 1``.  Two vertices are adjacent when
their masks differ in exactly one bit, and the *direction* of that edge is the
1-based element in which they differ.  All public functions speak 1-based
element indices; masks are an implementation detail callers may still use
directly.

A cycle is described by a start vertex and the sequence of edge directions
taken while walking it (``CycleSpec``).  The half-dimension helpers
(``theta``, ``bracket``, ``complement_in_half``) work on ``Q_{2h}`` viewed as
``Q_h x Q_h``: the lower half holds elements ``1..h`` and the upper half
``h+1..2h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import NotAdjacent, NotClosed, NotInLowerHalf, NotSimple, OutOfRange

MAX_DIM = 64


def vertex(*elements: int) -> int:
    """Mask of the subset holding ``elements`` (1-based)."""
    mask = 0
    for j in elements:
        if j < 1:
            raise OutOfRange(f"element {j} is not a positive integer")
        mask |= 1 << (j - 1)
    return mask


def elements(mask: int) -> tuple[int, ...]:
    """Sorted 1-based elements of ``mask``."""
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def format_vertex(mask: int) -> str:
    return "{" + ",".join(str(j) for j in elements(mask)) + "}"


def check_dimension(n: int) -> None:
    if not 1 <= n <= MAX_DIM:
        raise OutOfRange(f"dimension {n} outside 1..{MAX_DIM}")


def check_vertex(v: int, n: int) -> None:
    if v < 0 or v >> n:
        raise OutOfRange(f"vertex {format_vertex(v)} is not a vertex of Q_{n}")


def edge_direction(u: int, v: int) -> int:
    """The unique element in ``u Δ v``; raises ``NotAdjacent`` otherwise."""
    diff = u ^ v
    if diff == 0 or diff & (diff - 1):
        raise NotAdjacent(f"{format_vertex(u)} and {format_vertex(v)} are not adjacent")
    return diff.bit_length()


class Edge(NamedTuple):
    """Edge of Q_n in canonical form: ``lo`` is the endpoint without ``dir``."""

    lo: int
    dir: int

    @classmethod
    def between(cls, u: int, v: int) -> "Edge":
        d = edge_direction(u, v)
        return cls(min(u, v), d)

    @property
    def hi(self) -> int:
        return self.lo | (1 << (self.dir - 1))

    def __str__(self) -> str:
        return f"({format_vertex(self.lo)},{format_vertex(self.hi)})"


@dataclass(frozen=True)
class CycleSpec:
    """Cycle ``C(start, dirs)`` of Q_n.

    Walking ``start``, ``start Δ {dirs[0]}``, ... visits the cycle's vertices;
    the edge at 1-based position ``k`` joins the ``k``-th and ``(k+1)``-th
    vertices of that walk (cyclically).
    """

    start: int
    dirs: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        check_dimension(self.n)
        check_vertex(self.start, self.n)
        for d in self.dirs:
            if not 1 <= d <= self.n:
                raise OutOfRange(f"direction {d} outside 1..{self.n}")

    def __len__(self) -> int:
        return len(self.dirs)


def apply_sigma(a: int, spec: CycleSpec) -> CycleSpec:
    """Image of ``spec`` under the automorphism ``B -> a Δ B``."""
    return CycleSpec(a ^ spec.start, spec.dirs, spec.n)


def _check_half(half: int) -> None:
    if half < 1:
        raise OutOfRange(f"half-dimension {half} must be >= 1")


def theta(i: int, half: int) -> int:
    """Swap the lower and upper halves of ``[2*half]``: ``i -> i + half (mod 2*half)``."""
    _check_half(half)
    if not 1 <= i <= 2 * half:
        raise OutOfRange(f"direction {i} outside 1..{2 * half}")
    if i == half:
        return 2 * half
    return (i + half) % (2 * half)


def _lower_mask(half: int) -> int:
    return (1 << half) - 1


def theta_set(a: int, half: int) -> int:
    """Elementwise ``theta`` of a subset of the lower half."""
    _check_half(half)
    if a & ~_lower_mask(half):
        raise NotInLowerHalf(f"{format_vertex(a)} is not a subset of [{half}]")
    return a << half


def bracket(i: int, half: int) -> int:
    """``<i>``: empty for 0, ``{1..i}`` for ``i <= half``, ``{i-half+1..half}`` above."""
    _check_half(half)
    if not 0 <= i <= 2 * half:
        raise OutOfRange(f"bracket index {i} outside 0..{2 * half}")
    if i <= half:
        return (1 << i) - 1
    return _lower_mask(half) ^ ((1 << (i - half)) - 1)


def complement_in_half(x: int, half: int) -> int:
    _check_half(half)
    full = _lower_mask(half)
    if x & ~full:
        raise NotInLowerHalf(f"{format_vertex(x)} is not a subset of [{half}]")
    return full ^ x


def walk_cycle(spec: CycleSpec, n: int | None = None) -> list[int]:
    """Visited vertices of ``spec`` in walk order, checking it is a genuine cycle."""
    n = spec.n if n is None else n
    v = spec.start
    seen = set()
    out = []
    for d in spec.dirs:
        if not 1 <= d <= n:
            raise OutOfRange(f"direction {d} outside 1..{n}")
        if v in seen:
            raise NotSimple(f"vertex {format_vertex(v)} repeats")
        seen.add(v)
        out.append(v)
        v ^= 1 << (d - 1)
    if v != spec.start:
        raise NotClosed(f"walk from {format_vertex(spec.start)} ends at {format_vertex(v)}")
    if len(out) < 4:
        raise NotSimple(f"closed walk of length {len(out)} is not a cycle")
    return out


def cycle_edges(spec: CycleSpec) -> list[Edge]:
    """Canonical edges of ``spec`` in position order (position 1 first)."""
    out = []
    v = spec.start
    for d in spec.dirs:
        bit = 1 << (d - 1)
        out.append(Edge(v & ~bit, d))
        v ^= bit
    return out


def oriented_edge(vertices: Sequence[int], position: int) -> tuple[int, int]:
    """Endpoints of the edge at 1-based ``position``, in walk order."""
    k = len(vertices)
    return vertices[position - 1], vertices[position % k]


def direction_sequence(vertices: Iterable[int]) -> tuple[int, ...]:
    """Direction sequence of a closed vertex walk (last vertex joins the first)."""
    vs = list(vertices)
    return tuple(edge_direction(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs)))
