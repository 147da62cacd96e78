"""Tests for the Table model and its renderings."""
import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from polyeuler.shared.tables import Table


@pytest.fixture
def table():
    return Table.from_values(
        "poly-euler2: E^_n^(k)",
        ["1", "2"],
        ["k=1", "k=2"],
        [[0, -1], [Fraction(-1, 3), Fraction(5, 9)]],
    )


class TestTable:
    def test_cells_are_canonical(self, table):
        assert table.cells == [["0", "-1"], ["-1/3", "5/9"]]

    def test_csv(self, table):
        assert table.to_csv() == "n,k=1,k=2\n1,0,-1\n2,-1/3,5/9\n"

    def test_markdown(self, table):
        assert table.to_markdown() == (
            "poly-euler2: E^_n^(k)\n"
            "\n"
            "| n | k=1 | k=2 |\n"
            "|---|---|---|\n"
            "| 1 | 0 | -1 |\n"
            "| 2 | -1/3 | 5/9 |\n"
        )

    def test_json(self, table):
        data = json.loads(table.render("json"))
        assert data["col_labels"] == ["k=1", "k=2"]
        assert data["cells"][1] == ["-1/3", "5/9"]

    def test_unknown_format(self, table):
        with pytest.raises(ValueError):
            table.render("xlsx")

    def test_rejects_ragged_grid(self):
        with pytest.raises(ValidationError):
            Table(caption="c", row_labels=["1"], col_labels=["a", "b"], cells=[["1"]])

    def test_rejects_row_count_mismatch(self):
        with pytest.raises(ValidationError):
            Table(caption="c", row_labels=["1", "2"], col_labels=["a"], cells=[["1"]])
