"""
Test Suite for Long-Format CSV Ingestion

Covers:
- Single-table files (stratum "all")
- Stratified files, first-seen order, summed duplicate rows
- Malformed files (missing columns, bad codes, bad counts)
"""

from pathlib import Path

import pandas as pd
import pytest

from src.domain import TableFormatError, load_tables, tables_from_frame

DATA_DIR = Path(__file__).parent.parent / "data" / "tables"


def test_load_example_table():
    tables = load_tables(DATA_DIR / "example_table.csv")

    assert len(tables) == 1
    table = tables[0]
    assert (table.n11, table.n10, table.n01, table.n00) == (30, 70, 20, 80)
    assert table.stratum_label == "all"
    print(f"✅ Loaded {table}")


def test_load_stratified_table_keeps_order():
    tables = load_tables(DATA_DIR / "stratified_table.csv")

    assert [t.stratum_label for t in tables] == ["under_65", "65_plus"]
    assert (tables[1].n11, tables[1].n10, tables[1].n01, tables[1].n00) == (45, 55, 30, 70)


def test_duplicate_rows_are_summed(tmp_path):
    csv = tmp_path / "dup.csv"
    csv.write_text("exposure,outcome,count\n1,1,10\n1,1,5\n1,0,20\n0,1,3\n0,0,30\n")

    (table,) = load_tables(csv)
    assert table.n11 == 15
    assert table.total == 68


def test_missing_cells_count_as_zero():
    frame = pd.DataFrame({"exposure": [1, 1, 0], "outcome": [1, 0, 0], "count": [4, 6, 9]})
    (table,) = tables_from_frame(frame)
    assert table.n01 == 0
    assert table.has_zero_cell


def test_missing_file():
    with pytest.raises(FileNotFoundError):
        load_tables("no/such/table.csv")


@pytest.mark.parametrize(
    "content",
    [
        "exposure,count\n1,10\n",                              # no outcome column
        "exposure,outcome,count\n2,1,10\n",                    # exposure not 0/1
        "exposure,outcome,count\n1,yes,10\n",                  # outcome not numeric
        "exposure,outcome,count\n1,1,-3\n",                    # negative count
        "exposure,outcome,count\n1,1,2.5\n",                   # fractional count
        "exposure,outcome,count\n",                            # header only
    ],
)
def test_malformed_files(tmp_path, content):
    csv = tmp_path / "bad.csv"
    csv.write_text(content)
    with pytest.raises(TableFormatError):
        load_tables(csv)
