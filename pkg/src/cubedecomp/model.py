"""Decomposition records shared by the construction and verification modules."""

from __future__ import annotations

from dataclasses import dataclass

from .hypercube import CycleSpec, Edge, cycle_edges


@dataclass(frozen=True)
class Decomposition:
    """Cycles of length ``2**m * n`` with per-cycle matching positions (1-based).

    ``unverified`` marks output produced outside the verified envelope.
    """

    n: int
    m: int
    cycles: tuple[CycleSpec, ...]
    matching_positions: tuple[tuple[int, ...], ...]
    unverified: bool = False

    @property
    def cycle_length(self) -> int:
        return (1 << self.m) * self.n

    def __len__(self) -> int:
        return len(self.cycles)

    def matching_edges(self) -> list[Edge]:
        out = []
        for spec, positions in zip(self.cycles, self.matching_positions):
            edges = cycle_edges(spec)
            out.extend(edges[p - 1] for p in positions)
        return out


@dataclass(frozen=True)
class PathDecomposition:
    n: int
    r: int
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)
