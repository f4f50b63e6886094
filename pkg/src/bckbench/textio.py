"""Plain-text table format.

::

    # optional comment lines
    3
    0 0 0
    1 0 0
    2 1 0

The first data line is the order ``n``, followed by ``n`` rows of ``n``
whitespace-separated integers; row ``x`` lists ``x.0 ... x.(n-1)``. A file
may hold several records back to back.
"""

from __future__ import annotations

import re
from typing import Iterable

from .core import CayleyTable


class TableFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _ints(lineno: int, raw: str) -> list[tuple[int, int]]:
    """Integers on a line with their 1-based columns."""
    values = []
    for m in re.finditer(r"\S+", raw):
        try:
            values.append((int(m.group()), m.start() + 1))
        except ValueError:
            raise TableFormatError(
                f"expected an integer, got {m.group()!r}", lineno, m.start() + 1
            ) from None
    return values


def parse_tables(text: str) -> list[CayleyTable]:
    tables = []
    lines = _data_lines(text)
    for lineno, raw in lines:
        header = _ints(lineno, raw)
        if len(header) != 1 or header[0][0] < 1:
            raise TableFormatError("expected the table order (a positive integer)", lineno)
        n = header[0][0]
        rows = []
        last = lineno
        for _ in range(n):
            try:
                last, raw = next(lines)
            except StopIteration:
                raise TableFormatError(
                    f"expected {n} rows, found {len(rows)}", last + 1
                ) from None
            row = _ints(last, raw)
            if len(row) != n:
                raise TableFormatError(f"expected {n} entries, found {len(row)}", last)
            for v, col in row:
                if not 0 <= v < n:
                    raise TableFormatError(f"entry {v} is outside 0..{n - 1}", last, col)
            rows.append(tuple(v for v, _ in row))
        tables.append(CayleyTable(tuple(rows)))
    return tables


def parse_table(text: str) -> CayleyTable:
    tables = parse_tables(text)
    if len(tables) != 1:
        raise TableFormatError(f"expected exactly one table, found {len(tables)}", 1)
    return tables[0]


def format_table(table: CayleyTable, comment: str | None = None) -> str:
    lines = []
    if comment is not None:
        lines.extend(f"# {c}" if c else "#" for c in comment.splitlines())
    lines.append(str(table.order))
    lines.extend(" ".join(map(str, row)) for row in table.rows)
    return "\n".join(lines) + "\n"


def format_tables(tables: Iterable[CayleyTable], label: str = "algebra") -> str:
    return "".join(
        format_table(t, comment=f"{label} {i}") for i, t in enumerate(tables, start=1)
    )


def read_table(path) -> CayleyTable:
    with open(path) as fh:
        return parse_table(fh.read())
