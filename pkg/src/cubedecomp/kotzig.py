"""Splitting a product of two equal-pattern cycles into two Hamiltonian cycles.

For k-cycles ``C(U1, S)`` and ``C(U2, S)`` of Q_h, the product ``C1 x C2``
sits inside ``Q_2h`` (second factor relabelled by ``theta``) and splits into
two k^2-cycles sharing the start vertex ``U1 ∪ theta(U2)``: ``Phi`` follows
``product_sequence(S)`` and ``Gamma`` follows its ``theta`` image.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DirectionOutOfHalf
from .hypercube import CycleSpec, theta, theta_set, walk_cycle


@dataclass(frozen=True)
class ProductSplit:
    phi: CycleSpec
    gamma: CycleSpec


def product_sequence(seq: Sequence[int], half: int) -> tuple[int, ...]:
    """Direction sequence of ``Phi``: k blocks of length k.

    Block ``b`` (0-based) is the ``k-1`` terms of the cyclically repeated
    ``seq`` starting ``b`` places before its first term, closed by
    ``theta(seq[b])``.
    """
    k = len(seq)
    for d in seq:
        if not 1 <= d <= half:
            raise DirectionOutOfHalf(f"direction {d} outside 1..{half}")
    out: list[int] = []
    for b in range(k):
        first = -b % k
        out.extend(seq[(first + t) % k] for t in range(k - 1))
        out.append(theta(seq[b], half))
    return tuple(out)


def theta_sequence(seq: Sequence[int], half: int) -> tuple[int, ...]:
    return tuple(theta(d, half) for d in seq)


def kotzig_pair(u1: int, u2: int, seq: Sequence[int], half: int) -> ProductSplit:
    n = 2 * half
    walk_cycle(CycleSpec(u1, tuple(seq), half))
    walk_cycle(CycleSpec(u2, tuple(seq), half))
    start = u1 | theta_set(u2, half)
    phi_seq = product_sequence(seq, half)
    phi = CycleSpec(start, phi_seq, n)
    gamma = CycleSpec(start, theta_sequence(phi_seq, half), n)
    walk_cycle(phi)
    walk_cycle(gamma)
    return ProductSplit(phi, gamma)
