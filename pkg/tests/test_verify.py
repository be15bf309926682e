from dataclasses import replace

import pytest

from unitsums.classifier.tables import (
    COMPLEX_SPORADIC,
    COMPLEX_UV,
    CYCLIC_SPORADIC,
    CYCLIC_UV,
    SporadicTable,
)
from unitsums.classifier.solutions import row_solution
from unitsums.classifier.verify import verify_tables


@pytest.fixture(scope="module")
def report():
    return verify_tables()


def test_default_run_ok(report):
    assert report.ok
    assert report.summary() == "17 cyclic + 14 complex sporadic classes verified"
    assert report.section("cyclic_sporadic").matched == 17
    assert report.section("complex_sporadic").matched == 14
    assert len(CYCLIC_SPORADIC) == 17 and len(COMPLEX_SPORADIC) == 14


def test_embedded_rows_verify():
    for table in (CYCLIC_SPORADIC, COMPLEX_SPORADIC):
        for i, row in enumerate(table.rows):
            s = row_solution(row, i)
            assert s.n == row.n and s.field.disc == row.disc


def test_known_row_present():
    rows = [r for r in CYCLIC_SPORADIC.rows if r.field_label == "K_-1" and r.eps == (-6, 1, 3)]
    assert len(rows) == 1 and rows[0].delta == (8, -1, -3) and rows[0].n == 2


def _with_row(table, i, **changes):
    rows = list(table.rows)
    rows[i] = replace(rows[i], **changes)
    return SporadicTable(table.kind, tuple(rows))


def test_corrupted_coordinates_pinpointed():
    row = CYCLIC_SPORADIC.rows[4]
    bad = _with_row(CYCLIC_SPORADIC, 4, eps=(row.eps[0] + 1,) + row.eps[1:])
    r = verify_tables(cyclic_sporadic=bad)
    s = r.section("cyclic_sporadic")
    assert not r.ok and not s.ok
    assert s.row_errors and s.row_errors[0].startswith("row 4 ")
    assert r.section("complex_sporadic").ok


def test_corrupted_discriminant_pinpointed():
    bad = _with_row(COMPLEX_SPORADIC, 0, disc=COMPLEX_SPORADIC.rows[0].disc - 1)
    s = verify_tables(complex_sporadic=bad).section("complex_sporadic")
    assert not s.ok and "row 0 " in s.row_errors[0] and "discriminant" in s.row_errors[0]


def test_missing_and_extra_rows():
    r = verify_tables(cyclic_uv=CYCLIC_UV[1:])
    assert not r.ok and r.section("cyclic_uv").extra
    r = verify_tables(complex_uv=COMPLEX_UV + (replace(COMPLEX_UV[0], U=5, V=-1),))
    assert not r.ok and r.section("complex_uv").missing
