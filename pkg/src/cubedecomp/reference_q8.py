"""Q_8 reference data: the printed 64-cycle matching tables, and a comparison
against the construction.

``PRINTED_TABLES`` holds the sixteen tables exactly as printed, typos
included: eight rows of ``(label, first, second)`` per cycle, cycles keyed
by ``Phi_{A}{B}`` / ``Gamma_{A}{B}`` with the start ``A ∪ theta(B)``.
``TYPOS`` lists every printed value that disagrees with the verified
construction, with the corrected value.

Row ``k`` of a table in family ``i`` carries formula index ``k + 2i - 2``; the
rows are the cycle's matching edges listed from that index on, so for
``i = 2`` the first row is not the first matching edge in walk order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

from .basis import basis_decomposition, formula_position
from .errors import ParseError
from .hypercube import format_vertex, walk_cycle

Field = Literal["label", "first", "second"]

# 𝒮 for h = 4, transcribed with theta(k) written as k + 4
PRINTED_S = (
    1, 2, 3, 4, 1, 2, 3, 5,
    4, 1, 2, 3, 4, 1, 2, 6,
    3, 4, 1, 2, 3, 4, 1, 7,
    2, 3, 4, 1, 2, 3, 4, 8,
) * 2

PRINTED_THETA_S = (
    5, 6, 7, 8, 5, 6, 7, 1,
    8, 5, 6, 7, 8, 5, 6, 2,
    7, 8, 5, 6, 7, 8, 5, 3,
    6, 7, 8, 5, 6, 7, 8, 4,
) * 2

PRINTED_TABLES: dict[str, tuple[tuple[str, str, str], ...]] = {
    "Phi_{{}{}}": (
        ("e^1_1", "{}", "{1}"),
        ("e^1_2", "{4,5}", "{5}"),
        ("e^1_3", "{3,4,5,6}", "{4,5,6}"),
        ("e^1_4", "{2,3,4,5,6,7}", "{3,4,5,6,7}"),
        ("e^1_{4+1}", "{1,2,3,4,5,6,7,8}", "{2,3,4,5,6,7,8}"),
        ("e^1_{4+2}", "{1,2,3,6,7,8}", "{1,2,3,4,6,7,8}"),
        ("e^1_{4+3}", "{1,2,7,8}", "{1,2,3,7,8}"),
        ("e^1_{4+4}", "{1,8}", "{1,2,8}"),
    ),
    "Phi_{{}{1,3}}": (
        ("e^1_1", "{5,7}", "{1,5,7}"),
        ("e^1_2", "{4,7}", "{7}"),
        ("e^1_3", "{3,4,6,7}", "{4,6,7}"),
        ("e^1_4", "{2,3,4,6}", "{3,4,6}"),
        ("e^1_{4+1}", "{1,2,3,4,6,8}", "{2,3,4,6,8}"),
        ("e^1_{4+2}", "{1,2,3,5,6,8}", "{1,2,3,4,5,6,8}"),
        ("e^1_{4+3}", "{1,2,5,8}", "{1,2,3,5,8}"),
        ("e^1_{4+4}", "{1,5,7,8}", "{1,2,5,7,8}"),
    ),
    "Phi_{{1,3}{}}": (
        ("e^1_1", "{1,3}", "{3}"),
        ("e^1_2", "{1,3,4,5}", "{1,3,5}"),
        ("e^1_3", "{1,4,5,6}", "{1,3,4,5,6}"),
        ("e^1_4", "{1,2,4,5,6,7}", "{1,4,5,6,7}"),
        ("e^1_{4+1}", "{2,4,5,6,7,8}", "{1,2,4,5,6,7,8}"),
        ("e^1_{4+2}", "{2,6,7,8}", "{2,4,6,7,8}"),
        ("e^1_{4+3}", "{2,3,7,8}", "{2,7,8}"),
        ("e^1_{4+4}", "{3,8}", "{2,3,8}"),
    ),
    "Phi_{{1,3}{1,3}}": (
        ("e^1_1", "{1,3,5,7}", "{3,5,7}"),
        ("e^1_2", "{1,3,4,7}", "{1,3,7}"),
        ("e^1_3", "{1,4,6,7}", "{1,3,4,6,7}"),
        ("e^1_4", "{1,2,4,6}", "{1,4,6}"),
        ("e^1_{4+1}", "{2,4,6,8}", "{1,2,4,6,8}"),
        ("e^1_{4+2}", "{2,5,6,8}", "{2,4,5,6,8}"),
        ("e^1_{4+3}", "{2,3,5,8}", "{2,5,8}"),
        ("e^1_{4+4}", "{3,5,7,8}", "{2,3,5,7,8}"),
    ),
    "Phi_{{1,2}{1,2}}": (
        ("e^2_1", "{1,2}", "{2}"),
        ("e^2_2", "{1,2,4,7}", "{1,2,7}"),
        ("e^2_3", "{1,2,3,4,7,8}", "{1,2,4,7,8}"),
        ("e^2_4", "{1,3,4,5,7,8}", "{1,2,3,4,5,7,8}"),
        ("e^2_{4+1}", "{3,4,5,6,7,8}", "{1,3,4,5,6,7,8}"),
        ("e^2_{4+2}", "{3,5,6,8}", "{3,4,5,6,8}"),
        ("e^2_{4+3}", "{5,6}", "{3,5,6}"),
        ("e^2_{4+4}", "{2,6}", "{6}"),
    ),
    "Phi_{{1,2}{2,3}}": (
        ("e^2_1", "{1,2,5,7}", "{2,5,7}"),
        ("e^2_2", "{1,2,4,5}", "{1,2,5}"),
        ("e^2_3", "{1,2,3,4,5,8}", "{1,2,4,5,8}"),
        ("e^2_4", "{1,3,4,8}", "{1,2,3,4,8}"),
        ("e^2_{4+1}", "{3,4,6,8}", "{1,3,4,6,8}"),
        ("e^2_{4+2}", "{3,6,7,8}", "{3,4,6,7,8}"),
        ("e^2_{4+3}", "{6,7}", "{3,6,7}"),
        ("e^2_{4+4}", "{2,5,6,7}", "{5,6,7}"),
    ),
    "Phi_{{2,3}{1,2}}": (
        ("e^2_1", "{2,3}", "{1,2,3}"),
        ("e^2_2", "{2,3,4,7}", "{2,3,7}"),
        ("e^2_3", "{2,4,7,8}", "{2,3,4,7,8}"),
        ("e^2_4", "{4,5,7,8}", "{2,4,5,7,8}"),
        ("e^2_{4+1}", "{1,4,5,6,7,8}", "{4,5,6,7,8}"),
        ("e^2_{4+2}", "{1,5,6,8}", "{1,4,5,6,8}"),
        ("e^2_{4+3}", "{1,3,5,6}", "{1,5,6}"),
        ("e^2_{4+4}", "{1,2,3,6}", "{1,3,6}"),
    ),
    "Phi_{{2,3}{2,3}}": (
        ("e^2_1", "{2,3,5,7}", "{1,2,3,5,7}"),
        ("e^2_2", "{2,3,4,5}", "{2,3,5}"),
        ("e^2_3", "{2,4,5,8}", "{2,3,4,5,8}"),
        ("e^2_4", "{4,8}", "{2,4,8}"),
        ("e^2_{4+1}", "{1,4,6,8}", "{4,6,8}"),
        ("e^2_{4+2}", "{1,6,7,8}", "{1,4,6,7,8}"),
        ("e^2_{4+3}", "{1,3,6,7}", "{1,6,7}"),
        ("e^2_{4+4}", "{1,2,3,5,6,7}", "{1,3,5,6,7}"),
    ),
    "Gamma_{{}{}}": (
        ("f^1_1", "{5,6,7,8}", "{6,7,8}"),
        ("f^1_2", "{1,5,6,7}", "{1,5,6,7,8}"),
        ("f^1_3", "{1,2,5,6}", "{,1,2,5,6,7}"),
        ("f^1_4", "{1,2,3,5}", "{1,2,3,5,6}"),
        ("f^1_{4+1}", "{1,2,3,4}", "{1,2,3,4,5}"),
        ("f^1_{4+2}", "{2,3,4,8}", "{2,3,4}"),
        ("f^1_{4+3}", "{3,4,7,8}", "{3,4,8}"),
        ("f^1_{4+4}", "{4,6,7,8}", "{4,7,8}"),
    ),
    "Gamma_{{}{1,3}}": (
        ("f^1_1", "{6,8}", "{5,6,8}"),
        ("f^1_2", "{1,6,}", "{1,6,8}"),
        ("f^1_3", "{1,2,6,7}", "{1,2,6}"),
        ("f^1_4", "{1,2,3,7}", "{1,2,3,6,7}"),
        ("f^1_{4+1}", "{1,2,3,4,5,7}", "{1,2,3,4,7}"),
        ("f^1_{4+2}", "{2,3,4,5,7,8}", "{2,3,4,5,7}"),
        ("f^1_{4+3}", "{3,4,5,8}", "{3,4,5,7,8}"),
        ("f^1_{4+4}", "{4,5,6,8}", "{4,5,8}"),
    ),
    "Gamma_{{1,3}{}}": (
        ("f^2_1", "{1,3,5,6,7,8}", "{1,3,6,7,8}"),
        ("f^2_2", "{3,5,6,7}", "{3,5,6,7,8}"),
        ("f^2_3", "{2,3,5,6}", "{2,3,5,6,7}"),
        ("f^2_4", "{2,5}", "{2,5,6}"),
        ("f^2_{4+1}", "{2,4}", "{2,4,5}"),
        ("f^2_{4+2}", "{1,2,4,8}", "{1,2,4}"),
        ("f^2_{4+3}", "{1,4,7,8}", "{1,4,8}"),
        ("f^2_{4+4}", "{1,3,4,6,7,8}", "{1,3,4,7,8}"),
    ),
    "Gamma_{{1,3}{1,3}}": (
        ("f^2_1", "{1,3,6,8}", "{1,3,5,6,8}"),
        ("f^2_2", "{3,6}", "{3,6,8}"),
        ("f^2_3", "{2,3,6,7}", "{2,3,6}"),
        ("f^2_4", "{2,7}", "{2,6,7}"),
        ("f^2_{4+1}", "{2,4,5,7}", "{2,4,7}"),
        ("f^2_{4+2}", "{1,2,4,5,7,8}", "{1,2,4,5,7}"),
        ("f^2_{4+3}", "{1,4,5,8}", "{1,4,5,7,8}"),
        ("f^2_{4+4}", "{1,3,4,5,6,8}", "{1,3,4,5,8}"),
    ),
    "Gamma_{{1,2}{1,2}}": (
        ("f^2_1", "{7,8}", "{5,7,8}"),
        ("f^2_2", "{3,7}", "{3,7,8}"),
        ("f^2_3", "{3,4}", "{3,4,7}"),
        ("f^2_4", "{1,3,4,6}", "{1,3,4}"),
        ("f^2_{4+1}", "{1,2,3,4,5,6}", "{1,2,3,4,6}"),
        ("f^2_{4+2}", "{1,2,4,5,6,8}", "{1,2,4,5,6}"),
        ("f^2_{4+3}", "{1,2,5,6,7,8}", "{1,2,5,6,8}"),
        ("f^2_{4+4}", "{2,5,7,8}", "{2,5,6,7,8}"),
    ),
    "Gamma_{{1,2}{2,3}}": (
        ("f^2_1", "{5,8}", "{8}"),
        ("f^2_2", "{3,5}", "{3,5,8}"),
        ("f^2_3", "{3,4,5,7}", "{3,4,5}"),
        ("f^2_4", "{1,3,4,5,6,7}", "{1,3,4,5,7}"),
        ("f^2_{4+1}", "{1,2,3,4,6,7}", "{1,2,3,4,5,6,7}"),
        ("f^2_{4+2}", "{1,2,4,6,7,8}", "{1,2,4,6,7}"),
        ("f^2_{4+3}", "{1,2,6,8}", "{1,2,6,7,8}"),
        ("f^2_{4+4}", "{2,8}", "{2,6,8}"),
    ),
    "Gamma_{{2,3}{1,2}}": (
        ("f^2_1", "{1,3,7,8}", "{1,3,5,7,8}"),
        ("f^2_2", "{1,7}", "{1,7,8}"),
        ("f^2_3", "{1,4}", "{1,4,7}"),
        ("f^2_4", "{4,6}", "{4}"),
        ("f^2_{4+1}", "{2,4,5,6}", "{2,4,6}"),
        ("f^2_{4+2}", "{2,3,4,5,6,8}", "{2,3,4,5,6}"),
        ("f^2_{4+3}", "{2,3,5,6,7,8}", "{2,3,5,6,8}"),
        ("f^2_{4+4}", "{1,2,3,5,7,8}", "{1,2,3,5,6,7,8}"),
    ),
    "Gamma_{{2,3}{2,3}}": (
        ("f^2_1", "{1,3,5,8}", "{1,3,8}"),
        ("f^2_2", "{1,5}", "{1,5,8}"),
        ("f^2_3", "{1,4,5,7}", "{1,4,5}"),
        ("f^2_4", "{4,5,6,7}", "{4,5,7}"),
        ("f^2_{4+1}", "{2,4,6,7}", "{2,4,5,6,7}"),
        ("f^2_{4+2}", "{2,3,4,6,7,8}", "{2,3,4,6,7}"),
        ("f^2_{4+3}", "{2,3,6,8}", "{2,3,6,7,8}"),
        ("f^2_{4+4}", "{1,2,3,8}", "{1,2,3,6,8}"),
    ),
}


@dataclass(frozen=True)
class Typo:
    table: str
    row: int  # 1-based
    field: Field
    printed: str
    corrected: str
    reason: str


TYPOS = (
    Typo(
        "Gamma_{{}{1,3}}", 2, "first", "{1,6,}", "{1,6}",
        "stray comma; {1,6} is the walk vertex and is adjacent to the printed second vertex {1,6,8}",
    ),
    Typo(
        "Gamma_{{}{}}", 3, "second", "{,1,2,5,6,7}", "{1,2,5,6,7}",
        "stray leading comma; {1,2,5,6,7} is the walk vertex after {1,2,5,6}",
    ),
    Typo(
        "Gamma_{{1,3}{}}", 0, "label", "f^2", "f^1",
        "table is headed with family 2 but {1,3} lies in H_1; every row label carries the wrong superscript",
    ),
    Typo(
        "Gamma_{{1,3}{1,3}}", 0, "label", "f^2", "f^1",
        "same family-superscript slip as the neighbouring table",
    ),
)

_SET = re.compile(r"\{(?:[1-8](?:,[1-8])*)?\}")
_LABEL = re.compile(r"([ef])\^([12])_(?:(\d)|\{4\+(\d)\})")


def parse_printed_vertex(text: str) -> int:
    """Strict parser for a printed vertex such as ``{1,2,5}`` or ``{}``."""
    if not _SET.fullmatch(text):
        raise ParseError(0, f"not a vertex of Q_8: {text!r}")
    items = [int(t) for t in text[1:-1].split(",") if t]
    if items != sorted(set(items)):
        raise ParseError(0, f"elements not strictly ascending: {text!r}")
    mask = 0
    for j in items:
        mask |= 1 << (j - 1)
    return mask


def parse_label(text: str) -> tuple[str, int, int]:
    """``e^1_{4+2}`` -> ``("e", 1, 6)``."""
    m = _LABEL.fullmatch(text)
    if not m:
        raise ParseError(0, f"not a row label: {text!r}")
    letter, fam, low, high = m.groups()
    row = int(low) if low else 4 + int(high)
    if not 1 <= row <= 8:
        raise ParseError(0, f"row {row} outside 1..8")
    return letter, int(fam), row


def row_label(letter: str, family: int, row: int) -> str:
    return f"{letter}^{family}_{row}" if row <= 4 else f"{letter}^{family}_{{4+{row - 4}}}"


def table_name(kind: str, a: int, b: int) -> str:
    return f"{kind}_{{{format_vertex(a)}{format_vertex(b)}}}"


def corrected_tables() -> dict[str, tuple[tuple[str, str, str], ...]]:
    """Printed tables with ``TYPOS`` applied."""
    out = {name: [list(r) for r in rows] for name, rows in PRINTED_TABLES.items()}
    for t in TYPOS:
        rows = out[t.table]
        targets = range(len(rows)) if t.row == 0 else [t.row - 1]
        for k in targets:
            if t.field == "label":
                rows[k][0] = rows[k][0].replace(t.printed, t.corrected, 1)
            else:
                col = 1 if t.field == "first" else 2
                if rows[k][col] != t.printed:
                    raise ValueError(f"typo entry for {t.table} row {k + 1} does not match the table")
                rows[k][col] = t.corrected
    return {name: tuple(tuple(r) for r in rows) for name, rows in out.items()}


@dataclass(frozen=True)
class TableRow:
    table: str
    row: int
    position: int
    label: str
    first: str
    second: str

    def line(self) -> str:
        return f"{self.table} {self.label} ({self.first},{self.second})"


def construction_tables() -> list[TableRow]:
    """Matching edges of the Q_8 basis cycles laid out like the printed tables.

    Order: ``F_1, F_2`` (Phi) then ``F_1', F_2'`` (Gamma), cycles in coset
    order, rows ``1..8``.
    """
    m = 3
    n = 1 << m
    dec = basis_decomposition(m)
    out = []
    for kind, letter, family in (("Phi", "e", "phi"), ("Gamma", "f", "gamma")):
        for block in dec.blocks:
            cycles = block.phi if family == "phi" else block.gamma
            for (a, b), spec in zip(block.pairs, cycles):
                vs = walk_cycle(spec)
                name = table_name(kind, a, b)
                for row in range(1, n + 1):
                    pos = formula_position(block.index, row + 2 * block.index - 2, family, m)
                    u, v = vs[pos - 1], vs[pos % len(vs)]
                    out.append(
                        TableRow(name, row, pos, row_label(letter, block.index, row),
                                 format_vertex(u), format_vertex(v))
                    )
    return out


@dataclass(frozen=True)
class Mismatch:
    table: str
    row: int
    field: Field
    expected: str
    actual: str

    def line(self) -> str:
        return f"{self.table} row {self.row} {self.field}: table {self.expected!r}, construction {self.actual!r}"


def compare(tables: dict[str, tuple[tuple[str, str, str], ...]]) -> list[Mismatch]:
    """Field-by-field differences between ``tables`` and the construction."""
    built = construction_tables()
    names = list(dict.fromkeys(r.table for r in built))
    if set(names) != set(tables):
        missing = sorted(set(names) ^ set(tables))
        return [Mismatch(name, 0, "label", "", "table set differs") for name in missing]
    out = []
    for r in built:
        label, first, second = tables[r.table][r.row - 1]
        for fld, want, got in (("label", label, r.label), ("first", first, r.first),
                               ("second", second, r.second)):
            if want != got:
                out.append(Mismatch(r.table, r.row, fld, want, got))
    return out


def typo_fields() -> set[tuple[str, int, str]]:
    """``(table, row, field)`` triples covered by ``TYPOS``."""
    out = set()
    for t in TYPOS:
        rows = range(1, 9) if t.row == 0 else [t.row]
        out.update((t.table, k, t.field) for k in rows)
    return out
