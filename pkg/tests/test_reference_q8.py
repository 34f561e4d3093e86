import pytest

from cubedecomp.errors import ParseError
from cubedecomp.reference_q8 import (
    PRINTED_TABLES,
    TYPOS,
    compare,
    construction_tables,
    corrected_tables,
    parse_label,
    parse_printed_vertex,
    row_label,
    typo_fields,
)
from oracles import mask


def test_table_inventory():
    assert len(PRINTED_TABLES) == 16
    assert all(len(rows) == 8 for rows in PRINTED_TABLES.values())
    assert sum(name.startswith("Phi") for name in PRINTED_TABLES) == 8


def test_parse_vertex():
    assert parse_printed_vertex("{}") == 0
    assert parse_printed_vertex("{1,2,5}") == mask(1, 2, 5)
    for text in ("{1,6,}", "{,1,2,5,6,7}", "{2,1}", "{9}", "1,2", "{1,1}"):
        with pytest.raises(ParseError):
            parse_printed_vertex(text)


def test_parse_label():
    assert parse_label("e^1_{4+2}") == ("e", 1, 6)
    assert parse_label("f^2_3") == ("f", 2, 3)
    assert row_label("e", 2, 7) == "e^2_{4+3}"
    with pytest.raises(ParseError):
        parse_label("g^1_1")


def test_corrected_tables_parse_strictly():
    for rows in corrected_tables().values():
        for label, first, second in rows:
            parse_label(label)
            a, b = parse_printed_vertex(first), parse_printed_vertex(second)
            assert (a ^ b).bit_count() == 1


def test_phi_tables_exact():
    phi = {k: v for k, v in PRINTED_TABLES.items() if k.startswith("Phi")}
    assert not [m for m in compare(PRINTED_TABLES) if m.table in phi]


def test_gamma_differences_are_the_typo_list():
    diffs = {(m.table, m.row, m.field) for m in compare(PRINTED_TABLES)}
    assert diffs == typo_fields()
    assert len(TYPOS) <= 5


def test_corrected_tables_match():
    assert compare(corrected_tables()) == []


def test_examples():
    rows = {(r.table, r.row): r for r in construction_tables()}
    assert rows["Phi_{{}{}}", 1].line() == "Phi_{{}{}} e^1_1 ({},{1})"
    assert (rows["Phi_{{1,2}{1,2}}", 1].first, rows["Phi_{{1,2}{1,2}}", 1].second) == ("{1,2}", "{2}")
    last = rows["Phi_{{2,3}{2,3}}", 8]
    assert (last.first, last.second) == ("{1,2,3,5,6,7}", "{1,3,5,6,7}")
    assert rows["Phi_{{1,2}{1,2}}", 1].position == 19
