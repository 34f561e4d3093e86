"""Decomposition of Q_n into 2n-cycles and its vertex-disjoint coset families.

The 2n-cycle ``C(A, (1..n, 1..n))`` translated by every even subset ``A`` of
``[n-1]`` gives an edge decomposition of Q_n.  When ``n = 2**mu`` the
translates indexed by one coset of the standard subgroup are vertex-disjoint
and together span Q_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPowerOfTwo, OddDimension, ResourceCap
from .group import SubsetGroupParams, cosets, standard_subgroup
from .hypercube import CycleSpec

MAX_ENUMERATED_N = 24


def base_sequence(n: int) -> tuple[int, ...]:
    """``(1, 2, ..., n, 1, 2, ..., n)``."""
    return tuple(range(1, n + 1)) * 2


def even_subsets(n: int) -> list[int]:
    """Even subsets of ``[n-1]``, ascending by mask."""
    return [a for a in range(1 << (n - 1)) if a.bit_count() % 2 == 0]


@dataclass(frozen=True)
class TwoRegularFamily:
    n: int
    cycles: tuple[CycleSpec, ...]


def two_n_cycle_decomposition(n: int) -> list[CycleSpec]:
    if n < 2 or n % 2:
        raise OddDimension(f"n={n}: need an even dimension >= 2")
    if n > MAX_ENUMERATED_N:
        raise ResourceCap(f"n={n}: enumerating 2^{n - 2} cycles is refused above n={MAX_ENUMERATED_N}")
    seq = base_sequence(n)
    return [CycleSpec(a, seq, n) for a in even_subsets(n)]


def coset_spanning_families(n: int, mu: int) -> list[TwoRegularFamily]:
    """Families ``W_i = {C(A, S) : A in H_i}`` for the cosets ``H_1..H_{n/2}``."""
    if n != 1 << mu or mu < 1:
        raise NotPowerOfTwo(f"n={n} is not 2**{mu}")
    if n > MAX_ENUMERATED_N:
        raise ResourceCap(f"n={n} exceeds the enumeration envelope")
    family = cosets(standard_subgroup(SubsetGroupParams(n, mu)))
    seq = base_sequence(n)
    return [
        TwoRegularFamily(n, tuple(CycleSpec(a, seq, n) for a in family.coset(i)))
        for i in range(1, len(family) + 1)
    ]
