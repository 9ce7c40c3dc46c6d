"""
Unit tests for CSV/JSON artifacts and console tables.
"""

import json

import pytest

from foldcc.utils.reports import format_table, rows_to_csv, summary_to_json, write_text

ROWS = [{"m": "1", "A_paper": "299"}, {"m": "100", "A_paper": "508"}]


@pytest.mark.unit
class TestReports:
    """Test artifact writers."""

    def test_csv(self):
        """Test the header comes from the first row's keys."""
        assert rows_to_csv(ROWS) == "m,A_paper\n1,299\n100,508\n"

    def test_csv_empty(self):
        """Test no rows give an empty document."""
        assert rows_to_csv([]) == ""

    def test_json_sorted(self):
        """Test summaries serialize with sorted keys and a trailing newline."""
        text = summary_to_json({"trials": 3, "seed": 1})
        assert text.index('"seed"') < text.index('"trials"')
        assert text.endswith("\n")
        assert json.loads(text) == {"trials": 3, "seed": 1}

    def test_write_creates_parents(self, tmp_path):
        """Test writing into a missing directory creates it."""
        target = tmp_path / "out" / "rows.csv"
        write_text("x\n", target)
        assert target.read_text() == "x\n"

    def test_write_none_is_noop(self):
        """Test a missing path writes nothing."""
        write_text("x", None)

    def test_table_alignment(self):
        """Test columns are right-aligned to their widest cell."""
        lines = format_table(ROWS).splitlines()
        assert lines[0] == "  m  A_paper"
        assert lines[1] == "---  -------"
        assert lines[3] == "100      508"
        assert format_table([]) == ""
