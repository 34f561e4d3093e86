"""GF(2) subgroups of even subsets and their cosets.

Subsets of ``[h-1]`` with an even number of elements form a group ``G`` under
symmetric difference (XOR of masks), i.e. a GF(2) vector space.  The subgroup
``H`` used by the cycle construction is spanned by the pairs
``{j, 2^(i-1) + j}``; its cosets are the translates of ``H`` by the prefix
sets ``{1, ..., 2i-2}``.

Membership is decided with a reduced echelon basis, so the subgroup never has
to be materialised; ``Subgroup.elements`` enumerates it lazily when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CosetCollision, GeneratorOutOfRange, NotPowerOfTwo
from .hypercube import format_vertex


@dataclass(frozen=True)
class SubsetGroupParams:
    """Ambient bound ``h`` (subsets of ``[h-1]``) with ``h = 2**mu``."""

    h: int
    mu: int

    def __post_init__(self) -> None:
        if self.h < 2 or self.h & (self.h - 1) or self.h != 1 << self.mu:
            raise NotPowerOfTwo(f"h={self.h}, mu={self.mu}: need h = 2**mu >= 2")

    @classmethod
    def for_h(cls, h: int) -> "SubsetGroupParams":
        if h < 2 or h & (h - 1):
            raise NotPowerOfTwo(f"h={h} is not a power of two >= 2")
        return cls(h, h.bit_length() - 1)

    @property
    def universe(self) -> int:
        """Mask of ``[h-1]``."""
        return (1 << (self.h - 1)) - 1

    @property
    def group_order(self) -> int:
        """``|G| = 2**(h-2)``."""
        return 1 << (self.h - 2)


def is_even_subset(a: int, params: SubsetGroupParams) -> bool:
    return not a & ~params.universe and a.bit_count() % 2 == 0


def generator_set_K(params: SubsetGroupParams) -> list[int]:
    """Pairs ``{j, 2^(i-1)+j}`` for ``i = 2..mu``, ``j = 1..2^(i-1)-1``, as masks."""
    out = []
    for i in range(2, params.mu + 1):
        shift = 1 << (i - 1)
        for j in range(1, shift):
            out.append((1 << (j - 1)) | (1 << (shift + j - 1)))
    return out


def _reduce(vec: int, basis: dict[int, int]) -> int:
    while vec:
        top = vec.bit_length() - 1
        row = basis.get(top)
        if row is None:
            return vec
        vec ^= row
    return 0


@dataclass(frozen=True)
class Subgroup:
    params: SubsetGroupParams
    generators: tuple[int, ...]
    basis: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return 1 << self.rank

    @cached_property
    def _pivots(self) -> dict[int, int]:
        return {b.bit_length() - 1: b for b in self.basis}

    @cached_property
    def elements(self) -> tuple[int, ...]:
        """All members, sorted by mask."""
        span = [0]
        for b in self.basis:
            span += [x ^ b for x in span]
        return tuple(sorted(span))

    def __contains__(self, a: int) -> bool:
        return contains(self, a)

    def __iter__(self):
        return iter(self.elements)


def span_subgroup(generators, params: SubsetGroupParams) -> Subgroup:
    """GF(2) span of ``generators`` inside ``G``."""
    pivots: dict[int, int] = {}
    gens = tuple(generators)
    for g in gens:
        if not is_even_subset(g, params):
            raise GeneratorOutOfRange(
                f"{format_vertex(g)} is not an even subset of [{params.h - 1}]"
            )
        r = _reduce(g, pivots)
        if r:
            pivots[r.bit_length() - 1] = r
    # back-substitute so each pivot bit appears in exactly one basis row
    for top in sorted(pivots):
        row = pivots[top]
        for other in pivots:
            if other != top and pivots[other] >> top & 1:
                pivots[other] ^= row
    basis = tuple(pivots[t] for t in sorted(pivots))
    return Subgroup(params, gens, basis)


def standard_subgroup(params: SubsetGroupParams) -> Subgroup:
    """Span of ``generator_set_K``; its rank must be ``h - mu - 1``."""
    sub = span_subgroup(generator_set_K(params), params)
    expected = params.h - params.mu - 1
    if sub.rank != expected:
        raise AssertionError(f"rank of K is {sub.rank}, expected {expected}")
    return sub


def contains(sub: Subgroup, a: int) -> bool:
    if a & ~sub.params.universe:
        return False
    return _reduce(a, sub._pivots) == 0


def is_consecutive_string(a: int) -> bool:
    """True iff ``a`` is ``{x, x+1, ..., y}``; the empty set is not a string."""
    if a <= 0:
        return False
    low = a & -a
    run = a // low
    return run & (run + 1) == 0


@dataclass(frozen=True)
class CosetFamily:
    subgroup: Subgroup
    reps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def coset(self, i: int) -> tuple[int, ...]:
        """Elements of the ``i``-th coset (1-based), sorted by mask."""
        rep = self.reps[i - 1]
        return tuple(sorted(rep ^ x for x in self.subgroup.elements))

    def index_of(self, a: int) -> int:
        """1-based index of the coset holding ``a``."""
        for i, rep in enumerate(self.reps, start=1):
            if contains(self.subgroup, a ^ rep):
                return i
        raise ValueError(f"{format_vertex(a)} lies in no listed coset")


def cosets(sub: Subgroup) -> CosetFamily:
    """Cosets ``{1..2i-2} Δ H`` for ``i = 1..h/2``, checked to be distinct and exhaustive."""
    params = sub.params
    reps = tuple((1 << (2 * i - 2)) - 1 for i in range(1, params.h // 2 + 1))
    for a_idx, a in enumerate(reps):
        for b in reps[a_idx + 1:]:
            if contains(sub, a ^ b):
                raise CosetCollision(
                    f"{format_vertex(a)} and {format_vertex(b)} represent the same coset"
                )
    if len(reps) * len(sub) != params.group_order:
        raise CosetCollision(
            f"{len(reps)} cosets of size {len(sub)} do not cover |G| = {params.group_order}"
        )
    return CosetFamily(sub, reps)
