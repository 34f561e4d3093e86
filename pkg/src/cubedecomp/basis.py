"""Cycle decomposition of Q_n for n = 2**m with a perfect matching.

Q_n is the product Q_h x Q_h with ``h = n/2``.  The 2h-cycles of Q_h split
into vertex-disjoint families ``W_i`` (one per coset ``H_i``), and every
product of two cycles of the same family splits into the pair ``Phi``,
``Gamma`` of n^2-cycles.  ``F_i`` collects the ``Phi`` cycles of family ``i``
and ``F_i'`` the ``Gamma`` cycles.

Matching edges are chosen by position: every cycle of ``F_i`` contributes the
edges at positions ``2i-1, 2i-1+n, ...`` and every cycle of ``F_i'`` those at
``n/2+2i-1, n/2+2i-1+n, ...``.  ``matching_edge_endpoints`` gives the same
edges in closed form and is used only as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import RangeViolation, ResourceCap
from .group import SubsetGroupParams, cosets, standard_subgroup
from .hypercube import CycleSpec, Edge, bracket, complement_in_half, theta_set
from .kotzig import kotzig_pair
from .model import Decomposition
from .mollard_ramras import base_sequence

DEFAULT_MAX_N = 16

Family = Literal["phi", "gamma"]
Wing = Literal["low", "high"]


@dataclass(frozen=True)
class CosetBlock:
    """``F_i`` and ``F_i'`` for one coset index ``i``.

    ``pairs[k] = (A, B)`` with ``A, B`` in ``H_i``; ``phi[k]`` and ``gamma[k]``
    both start at ``A ∪ theta(B)``.
    """

    index: int
    pairs: tuple[tuple[int, int], ...]
    phi: tuple[CycleSpec, ...]
    gamma: tuple[CycleSpec, ...]
    phi_offset: int
    gamma_offset: int


@dataclass(frozen=True)
class BasisDecomposition:
    n: int
    m: int
    blocks: tuple[CosetBlock, ...]

    @property
    def cycles(self) -> tuple[CycleSpec, ...]:
        """``F_1, F_2, ..., F_1', F_2', ...`` in that order."""
        return tuple(c for b in self.blocks for c in b.phi) + tuple(
            c for b in self.blocks for c in b.gamma
        )

    @property
    def matching_offsets(self) -> tuple[int, ...]:
        return tuple(b.phi_offset for b in self.blocks if b.phi) + tuple(
            b.gamma_offset for b in self.blocks if b.gamma
        )

    def to_decomposition(self) -> Decomposition:
        return Decomposition(self.n, self.m, self.cycles, select_matching(self).positions)


@dataclass(frozen=True)
class MatchingSelection:
    """1-based matching positions, aligned with ``BasisDecomposition.cycles``."""

    positions: tuple[tuple[int, ...], ...]


def basis_decomposition(m: int, limit: int = DEFAULT_MAX_N) -> BasisDecomposition:
    if m < 1:
        raise RangeViolation(f"m={m}: need m >= 1")
    n = 1 << m
    if n > limit:
        raise ResourceCap(f"n={n} exceeds the construction limit {limit}")
    if m == 1:
        square = CycleSpec(0, (1, 2, 1, 2), 2)
        return BasisDecomposition(2, 1, (CosetBlock(1, ((0, 0),), (square,), (), 1, 0),))

    half = n // 2
    family = cosets(standard_subgroup(SubsetGroupParams(half, m - 1)))
    seq = base_sequence(half)
    blocks = []
    for i in range(1, len(family) + 1):
        members = family.coset(i)
        pairs = tuple((a, b) for a in members for b in members)
        splits = [kotzig_pair(a, b, seq, half) for a, b in pairs]
        blocks.append(
            CosetBlock(
                index=i,
                pairs=pairs,
                phi=tuple(s.phi for s in splits),
                gamma=tuple(s.gamma for s in splits),
                phi_offset=2 * i - 1,
                gamma_offset=half + 2 * i - 1,
            )
        )
    return BasisDecomposition(n, m, tuple(blocks))


def select_matching(dec: BasisDecomposition) -> MatchingSelection:
    n = dec.n
    count = 1 << dec.m

    def positions(offset: int) -> tuple[int, ...]:
        return tuple(offset + t * n for t in range(count))

    phi = [positions(b.phi_offset) for b in dec.blocks for _ in b.phi]
    gamma = [positions(b.gamma_offset) for b in dec.blocks for _ in b.gamma]
    return MatchingSelection(tuple(phi + gamma))


def formula_range(i: int, m: int) -> range:
    """Admissible ``r`` for coset index ``i``: ``2i-1 .. n/2+2i-2``."""
    half = 1 << (m - 1)
    return range(2 * i - 1, half + 2 * i - 1)


def matching_edge_endpoints(
    i: int, r: int, a: int, b: int, family: Family, wing: Wing, m: int
) -> tuple[int, int]:
    """Closed-form matching edge of the cycle with start ``A' ∪ theta(B')``.

    ``a`` and ``b`` are members of the base subgroup ``H``; the cycle lives in
    ``F_i`` (``family="phi"``) or ``F_i'`` (``"gamma"``) with
    ``A' = a Δ {1..2i-2}`` and ``B' = b Δ {1..2i-2}``.  ``wing="high"`` selects
    the edge indexed ``n/2 + r``.  Endpoints come back in walk order.
    """
    if m < 2:
        raise RangeViolation("closed forms need m >= 2")
    n = 1 << m
    half = n // 2
    if not 1 <= i <= n // 4:
        raise RangeViolation(f"coset index {i} outside 1..{n // 4}")
    if r not in formula_range(i, m):
        raise RangeViolation(f"r={r} outside {2 * i - 1}..{half + 2 * i - 2}")

    def br(k: int) -> int:
        return bracket(k, half)

    def bar(x: int) -> int:
        return complement_in_half(x, half)

    def th(x: int) -> int:
        return theta_set(x, half)

    off = br(2 * i - 2)
    near, far = br(half - r + 2 * i - 1), br(half - r + 2 * i)
    prev = br(r - 1)
    lower = a ^ off
    if family == "phi":
        if wing == "low":
            tail = th(prev ^ off ^ b)
            return lower ^ bar(near) ^ tail, lower ^ bar(far) ^ tail
        tail = th(bar(prev) ^ off ^ b)
        return lower ^ near ^ tail, lower ^ far ^ tail
    if family == "gamma":
        if wing == "low":
            head = lower ^ prev
            return head ^ th(off ^ near ^ b), head ^ th(off ^ far ^ b)
        head = lower ^ bar(prev)
        return head ^ th(off ^ bar(near) ^ b), head ^ th(off ^ bar(far) ^ b)
    raise ValueError(f"unknown family {family!r}")


def matching_edge_formula(
    i: int, r: int, a: int, b: int, family: Family, wing: Wing, m: int
) -> Edge:
    return Edge.between(*matching_edge_endpoints(i, r, a, b, family, wing, m))


def formula_position(i: int, index: int, family: Family, m: int) -> int:
    """Cycle position of the closed-form edge with overall index ``index``.

    ``index`` is ``r`` for the low wing and ``n/2 + r`` for the high wing.
    """
    n = 1 << m
    offset = 2 * i - 1 if family == "phi" else n // 2 + 2 * i - 1
    return offset + ((index - 1) % n) * n
