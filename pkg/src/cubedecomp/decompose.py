"""Top-level constructions: 2^m n-cycle decompositions and path decompositions."""

from __future__ import annotations

from .basis import basis_decomposition
from .errors import BadParameters, NotADivisor, ResourceCap
from .hypercube import MAX_DIM, walk_cycle
from .induction import lift_decomposition
from .model import Decomposition, PathDecomposition

DEFAULT_MAX_N = 16
OPT_IN_MAX_N = 24


def check_parameters(n: int, m: int) -> None:
    if m < 1:
        raise BadParameters(f"m={m}: need m >= 1")
    if n % 2:
        raise BadParameters(f"n={n}: need an even dimension")
    if n < 1 << m:
        raise BadParameters(f"n={n} < 2^m = {1 << m}")


def decompose(n: int, m: int, limit: int = DEFAULT_MAX_N) -> Decomposition:
    """Q_n as ``2^(n-1-m)`` cycles of length ``2^m n`` with a perfect matching.

    ``limit`` bounds ``n``; raise it up to ``OPT_IN_MAX_N`` for verified runs.
    Anything above ``OPT_IN_MAX_N`` is marked unverified.
    """
    check_parameters(n, m)
    if n > limit:
        raise ResourceCap(f"n={n} exceeds the limit {limit}")
    if n > MAX_DIM:
        raise ResourceCap(f"n={n} exceeds the mask width {MAX_DIM}")
    dec = basis_decomposition(m, limit=limit).to_decomposition()
    # each lifted input already carries a perfect matching by construction
    first = True
    while dec.n < n:
        dec = lift_decomposition(dec, check=first)
        first = False
    if n > OPT_IN_MAX_N:
        dec = Decomposition(dec.n, dec.m, dec.cycles, dec.matching_positions, unverified=True)
    return dec


def path_decomposition(dec: Decomposition, r: int) -> PathDecomposition:
    """Cut every cycle into paths of ``r`` edges, starting at its first matching edge."""
    length = dec.cycle_length
    if r < 1 or r >= length or length % r:
        raise NotADivisor(f"r={r} must be a proper divisor of the cycle length {length}")
    paths = []
    for spec, positions in zip(dec.cycles, dec.matching_positions):
        vs = walk_cycle(spec)
        k = len(vs)
        first = min(positions) - 1 if positions else 0
        for j in range(k // r):
            base = first + j * r
            paths.append(tuple(vs[(base + t) % k] for t in range(r + 1)))
    return PathDecomposition(dec.n, r, tuple(paths))


def default_path_lengths(n: int, m: int) -> list[int]:
    """``n, 2n, ..., 2^(m-1) n``."""
    return [(1 << j) * n for j in range(m)]
