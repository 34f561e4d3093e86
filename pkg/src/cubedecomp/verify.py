"""Brute-force checks for decompositions of Q_n.

Nothing here calls the construction code.  Walks are re-derived from the raw
start masks and direction lists, and the edge set of Q_n is enumerated as all
pairs ``(v, v Δ {i})``.  Every check collects findings instead of stopping at
the first problem.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_EDGE_SET_N = 20
MAX_CYCLE_CHECK_N = 24


def _fmt(mask: int) -> str:
    return "{" + ",".join(str(j + 1) for j in range(mask.bit_length()) if mask >> j & 1) + "}"


@dataclass(frozen=True)
class Finding:
    kind: str
    detail: str

    def line(self) -> str:
        return f"{self.kind}\t{self.detail}"


@dataclass
class Report:
    findings: list[Finding] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    facts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.findings

    def add(self, kind: str, detail: str) -> None:
        self.findings.append(Finding(kind, detail))

    def extend(self, other: "Report") -> "Report":
        self.findings += other.findings
        self.skipped += other.skipped
        self.facts.update(other.facts)
        return self

    def kinds(self) -> set[str]:
        return {f.kind for f in self.findings}

    def lines(self) -> list[str]:
        return [f.line() for f in self.findings]

    def render_text(self) -> str:
        if self.ok:
            head = "OK"
        else:
            head = f"FAILED: {len(self.findings)} finding(s)"
        body = [f"  {f.kind}: {f.detail}" for f in self.findings]
        body += [f"  skipped: {s}" for s in self.skipped]
        return "\n".join([head] + body)


def _walk(start: int, dirs: Sequence[int]) -> list[int]:
    out = []
    v = start
    for d in dirs:
        out.append(v)
        v ^= 1 << (d - 1)
    return out


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def verify_cycle(spec, n: int, label: str = "cycle") -> Report:
    """Closure, simplicity, direction range and minimum length of one cycle."""
    rep = Report()
    start, dirs = spec.start, tuple(spec.dirs)
    if start < 0 or start >> n:
        rep.add("BadVertex", f"{label}: start {_fmt(start)} is not in Q_{n}")
    bad = [d for d in dirs if not 1 <= d <= n]
    if bad:
        rep.add("BadDirection", f"{label}: directions {sorted(set(bad))} outside 1..{n}")
        return rep
    vs = _walk(start, dirs)
    end = vs[-1] ^ (1 << (dirs[-1] - 1)) if dirs else start
    if end != start:
        rep.add("NotClosed", f"{label}: walk from {_fmt(start)} ends at {_fmt(end)}")
    counts = Counter(vs)
    repeated = [v for v, c in counts.items() if c > 1]
    if repeated:
        rep.add("NotSimple", f"{label}: {len(repeated)} repeated vertex(es), first {_fmt(repeated[0])}")
    elif len(dirs) < 4 and end == start:
        rep.add("NotSimple", f"{label}: closed walk of length {len(dirs)}")
    return rep


def verify_edge_partition(cycles: Iterable, n: int) -> Report:
    """Every edge of Q_n lies on exactly one of ``cycles``."""
    rep = Report()
    if n > MAX_EDGE_SET_N:
        rep.skipped.append(f"edge partition for n={n} > {MAX_EDGE_SET_N}")
        return rep
    seen: dict[tuple[int, int], int] = {}
    duplicates = 0
    first_dup = None
    invalid = 0
    for idx, spec in enumerate(cycles, start=1):
        v = spec.start
        for d in spec.dirs:
            if not 1 <= d <= n:
                invalid += 1
                continue
            w = v ^ (1 << (d - 1))
            key = _edge_key(v, w)
            if key in seen:
                duplicates += 1
                if first_dup is None:
                    first_dup = (key, seen[key], idx)
            else:
                seen[key] = idx
            v = w
    if invalid:
        rep.add("BadDirection", f"{invalid} step(s) with direction outside 1..{n}")
    if duplicates:
        key, a, b = first_dup
        rep.add(
            "Duplicate",
            f"{duplicates} repeated edge(s); first ({_fmt(key[0])},{_fmt(key[1])}) on cycles {a} and {b}",
        )
    expected = n << (n - 1)
    missing = 0
    first_missing = None
    for v in range(1 << n):
        for i in range(n):
            w = v ^ (1 << i)
            if v < w and (v, w) not in seen:
                missing += 1
                if first_missing is None:
                    first_missing = (v, w)
    if missing:
        a, b = first_missing
        rep.add("Missing", f"{missing} edge(s) uncovered; first ({_fmt(a)},{_fmt(b)})")
    rep.facts["edges_covered"] = len(seen)
    rep.facts["edges_expected"] = expected
    return rep


def _selected_edges(dec) -> list[tuple[int, int]]:
    out = []
    for spec, positions in zip(dec.cycles, dec.matching_positions):
        vs = _walk(spec.start, spec.dirs)
        k = len(vs)
        for p in positions:
            if 1 <= p <= k:
                out.append((vs[p - 1], vs[p % k]))
    return out


def verify_matching(dec) -> Report:
    """Selected edges are pairwise vertex-disjoint and cover all 2^n vertices."""
    return verify_edge_matching(_selected_edges(dec), dec.n)


def verify_edge_matching(edges: Sequence[tuple[int, int]], n: int) -> Report:
    rep = Report()
    owner: dict[int, int] = {}
    conflicts = 0
    first = None
    for idx, (u, v) in enumerate(edges):
        x = u ^ v
        if x == 0 or x & (x - 1) or max(u, v) >> n:
            rep.add("NotAnEdge", f"({_fmt(u)},{_fmt(v)}) is not an edge of Q_{n}")
            continue
        for w in (u, v):
            if w in owner:
                conflicts += 1
                if first is None:
                    first = w
            else:
                owner[w] = idx
    if conflicts:
        rep.add("Conflict", f"{conflicts} vertex clash(es); first at {_fmt(first)}")
    uncovered = (1 << n) - len(owner)
    if uncovered:
        v = next(v for v in range(1 << n) if v not in owner)
        rep.add("Uncovered", f"{uncovered} vertex(es) unmatched; first {_fmt(v)}")
    rep.facts["matching_size"] = len(edges)
    return rep


def _path_components(k: int, cut: Sequence[int]) -> list[int]:
    """Edge counts of the arcs left on a k-cycle after deleting edge positions ``cut``."""
    cuts = sorted(set(cut))
    if not cuts:
        return []
    lengths = []
    for a, b in zip(cuts, cuts[1:] + [cuts[0] + k]):
        lengths.append(b - a - 1)
    return lengths


def verify_condition_I(dec) -> Report:
    """Deleting each cycle's selected edges leaves 2^m paths of n-1 edges."""
    rep = Report()
    want_count = 1 << dec.m
    want_len = dec.n - 1
    bad = 0
    first = None
    for idx, (spec, positions) in enumerate(zip(dec.cycles, dec.matching_positions), start=1):
        k = len(spec.dirs)
        problems = []
        if len(set(positions)) != len(positions):
            problems.append("repeated positions")
        if any(not 1 <= p <= k for p in positions):
            problems.append("position out of range")
        else:
            # components of the cycle graph minus the cut edges
            vs = _walk(spec.start, spec.dirs)
            adj: dict[int, list[int]] = {v: [] for v in vs}
            cut = {_edge_key(vs[p - 1], vs[p % k]) for p in positions}
            for j in range(k):
                u, w = vs[j], vs[(j + 1) % k]
                if _edge_key(u, w) not in cut:
                    adj[u].append(w)
                    adj[w].append(u)
            seen: set[int] = set()
            comps = []
            for v in vs:
                if v in seen:
                    continue
                stack, comp_v, degs = [v], 0, 0
                seen.add(v)
                while stack:
                    x = stack.pop()
                    comp_v += 1
                    degs += len(adj[x])
                    for y in adj[x]:
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
                comps.append((comp_v, degs // 2))
            if len(comps) != want_count:
                problems.append(f"{len(comps)} components, want {want_count}")
            wrong = [c for c in comps if c[1] != want_len or c[0] != c[1] + 1]
            if wrong:
                problems.append(f"{len(wrong)} component(s) not a path of {want_len} edges")
        if problems:
            bad += 1
            if first is None:
                first = f"cycle {idx}: " + "; ".join(problems)
    if bad:
        rep.add("ConditionI", f"{bad} cycle(s) fail; {first}")
    return rep


def verify_spanning_two_regular(family, n: int) -> Report:
    """Cycles of ``family`` are vertex-disjoint and together cover V(Q_n)."""
    rep = Report()
    cycles = family.cycles if hasattr(family, "cycles") else family
    owner: dict[int, int] = {}
    overlaps = 0
    first = None
    for idx, spec in enumerate(cycles, start=1):
        for v in _walk(spec.start, spec.dirs):
            if v in owner and owner[v] != idx:
                overlaps += 1
                if first is None:
                    first = (v, owner[v], idx)
            owner.setdefault(v, idx)
    if overlaps:
        v, a, b = first
        rep.add("Overlap", f"{overlaps} shared vertex(es); first {_fmt(v)} on cycles {a} and {b}")
    if len(owner) != 1 << n:
        rep.add("NotSpanning", f"{len(owner)} of {1 << n} vertices covered")
    return rep


def verify_decomposition(dec) -> Report:
    """All checks for a cycle decomposition with matching."""
    rep = Report()
    n, m = dec.n, dec.m
    length = (1 << m) * n
    want = 1 << (n - 1 - m) if n - 1 - m >= 0 else 0
    if len(dec.cycles) != want:
        rep.add("BadCount", f"{len(dec.cycles)} cycles, want 2^(n-1-m) = {want}")
    if len(dec.matching_positions) != len(dec.cycles):
        rep.add("BadCount", "matching position lists do not align with cycles")
    if n > MAX_CYCLE_CHECK_N:
        rep.skipped.append(f"per-cycle checks for n={n} > {MAX_CYCLE_CHECK_N}")
        return rep
    wrong_len = sum(1 for c in dec.cycles if len(c.dirs) != length)
    if wrong_len:
        rep.add("BadLength", f"{wrong_len} cycle(s) not of length {length}")
    wrong_count = sum(1 for p in dec.matching_positions if len(p) != 1 << m)
    if wrong_count:
        rep.add("BadPositions", f"{wrong_count} cycle(s) without exactly {1 << m} selected edges")
    for idx, spec in enumerate(dec.cycles, start=1):
        rep.extend(verify_cycle(spec, n, label=f"cycle {idx}"))
    rep.extend(verify_edge_partition(dec.cycles, n))
    rep.extend(verify_matching(dec))
    rep.extend(verify_condition_I(dec))
    return rep
