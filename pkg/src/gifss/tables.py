"""Rendering of decision-pipeline tables as plain text, CSV, or JSON.

Output is deterministic and byte-stable for identical inputs. Degrees are
printed in canonical form: trailing zeros trimmed, at least one fractional
digit when a nonzero fraction exists, integers bare. A comparison table
serialises to JSON as the bare integer matrix; other tables serialise as
an object with headers and rows.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .decision import ComparisonTable, ReducedTable, ScoreVector, RankingResult
from .degrees import Degree

Cell = "str | int | Degree"


@dataclass(frozen=True)
class Table:
    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple, ...]
    json_matrix: bool = False


def _cell_text(cell) -> str:
    if isinstance(cell, Degree):
        return str(cell)
    return str(cell)


def _cell_json(cell):
    if isinstance(cell, Degree):
        return str(cell)
    return cell


def emit_table(table: Table, format: str = "plain") -> str:
    if format == "plain":
        return _emit_plain(table)
    if format == "csv":
        return _emit_csv(table)
    if format == "json":
        return _emit_json(table)
    raise ValueError(f"unknown format {format!r}")


def _emit_plain(table: Table) -> str:
    grid = [list(table.headers)] + [
        [_cell_text(c) for c in row] for row in table.rows
    ]
    widths = [max(len(r[i]) for r in grid) for i in range(len(table.headers))]
    lines = [table.title]
    for r in grid:
        padded = [r[0].ljust(widths[0])] + [
            r[i].rjust(widths[i]) for i in range(1, len(widths))
        ]
        lines.append("  ".join(padded).rstrip())
    return "\n".join(lines) + "\n"


def _emit_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.headers)
    for row in table.rows:
        writer.writerow([_cell_text(c) for c in row])
    return buf.getvalue()


def _emit_json(table: Table) -> str:
    if table.json_matrix:
        payload = [[_cell_json(c) for c in row[1:]] for row in table.rows]
    else:
        payload = {
            "headers": list(table.headers),
            "rows": [[_cell_json(c) for c in row] for row in table.rows],
        }
    return json.dumps(payload) + "\n"


def reduced_value_table(rt: ReducedTable, which: str) -> Table:
    """Element-by-parameter matrix of mu' or nu' values."""
    if which == "membership":
        title, source = "Reduced memberships", rt.mu_prime
    else:
        title, source = "Reduced non-memberships", rt.nu_prime
    rows = tuple(
        (x,) + tuple(source[k][i] for k in range(len(rt.params)))
        for i, x in enumerate(rt.universe.elements)
    )
    return Table(title, ("element",) + rt.params, rows)


def comparison_matrix_table(ct: ComparisonTable, title: str) -> Table:
    rows = tuple(
        (x,) + ct.counts[i] for i, x in enumerate(ct.universe.elements)
    )
    return Table(title, ("element",) + ct.universe.elements, rows, json_matrix=True)


def score_vector_table(sv: ScoreVector, title: str) -> Table:
    rows = tuple(
        (x, sv.row_sum[i], sv.col_sum[i], sv.score[i])
        for i, x in enumerate(sv.universe.elements)
    )
    return Table(title, ("element", "row_sum", "column_sum", "score"), rows)


def final_score_table(
    mem: ScoreVector, nonmem: ScoreVector, ranking: RankingResult
) -> Table:
    rows = tuple(
        (x, mem.score[i], nonmem.score[i], ranking.final_score[i])
        for i, x in enumerate(ranking.universe.elements)
    )
    return Table(
        "Final scores",
        ("element", "membership_score", "nonmembership_score", "final_score"),
        rows,
    )
