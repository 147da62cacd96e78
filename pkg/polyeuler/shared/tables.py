"""Two-dimensional grids of exact values and their text renderings."""
from __future__ import annotations

import csv
import io
from typing import List, Sequence

from pydantic import BaseModel, model_validator

from .rationals import Rational, canonical

FORMATS = ("json", "csv", "md")


class Table(BaseModel):
    """Rows are indexed by n, columns by the family parameter."""

    caption: str
    row_labels: List[str]
    col_labels: List[str]
    cells: List[List[str]]

    @model_validator(mode="after")
    def _rectangular(self) -> "Table":
        if len(self.cells) != len(self.row_labels):
            raise ValueError(f"{len(self.cells)} rows for {len(self.row_labels)} row labels")
        width = len(self.col_labels)
        for label, row in zip(self.row_labels, self.cells):
            if len(row) != width:
                raise ValueError(f"row {label} has {len(row)} cells, expected {width}")
        return self

    @classmethod
    def from_values(
        cls,
        caption: str,
        row_labels: Sequence[str],
        col_labels: Sequence[str],
        values: Sequence[Sequence[Rational]],
    ) -> "Table":
        return cls(
            caption=caption,
            row_labels=list(row_labels),
            col_labels=list(col_labels),
            cells=[[canonical(v) for v in row] for row in values],
        )

    def to_json(self) -> str:
        return self.model_dump_json()

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
        writer.writerow(["n", *self.col_labels])
        for label, row in zip(self.row_labels, self.cells):
            writer.writerow([label, *row])
        return buffer.getvalue()

    def to_markdown(self) -> str:
        lines = [
            f"{self.caption}",
            "",
            "| n | " + " | ".join(self.col_labels) + " |",
            "|---|" + "---|" * len(self.col_labels),
        ]
        for label, row in zip(self.row_labels, self.cells):
            lines.append(f"| {label} | " + " | ".join(row) + " |")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
