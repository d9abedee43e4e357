"""The {3,4} infinite families, generated from transcribed adjacency tables."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from longref.errors import TableDataError
from longref.graph import Graph, build_graph
from longref.refine import is_long_refinement
from longref.utils import get_logger, load_yaml

logger = get_logger(__name__)

TABLES_PATH = Path(__file__).parent / "data" / "tables.yaml"

_LINEAR = re.compile(r"^(?:(\d*)k)?([+-]\d+)?$")


@dataclass(frozen=True, slots=True)
class TableFamilySpec:
    table: int
    variant: int
    parameter: int

    def __str__(self) -> str:
        return f"table {self.table} variant {self.variant} k={self.parameter}"


def linear(expr: str) -> tuple[int, int]:
    """'6k+13' -> (6, 13), 'k-1' -> (1, -1), '4' -> (0, 4)."""
    text = expr.replace(" ", "").replace("n", "k")
    if text.isdigit():
        return 0, int(text)
    match = _LINEAR.match(text)
    if not match or not text:
        raise TableDataError(f"cannot read expression {expr!r}")
    coeff, const = match.groups()
    return (1 if coeff == "" else int(coeff or 0)), int(const or 0)


def evaluate(expr: str, k: int) -> int:
    a, b = linear(expr)
    return a * k + b


@lru_cache(maxsize=None)
def load_tables(path: str = str(TABLES_PATH)) -> dict:
    return load_yaml(path)["tables"]


def available_tables() -> list[int]:
    return sorted(load_tables())


def table_order(table: int, k: int) -> int:
    return evaluate(_table(table)["order"], k)


def _table(table: int) -> dict:
    tables = load_tables()
    if table not in tables:
        raise TableDataError(f"unknown table {table}, expected one of {sorted(tables)}", table=table)
    return tables[table]


def table_rows(spec: TableFamilySpec) -> dict[int, list[int]]:
    """Neighbour lists per vertex after evaluating every row at k = parameter."""
    data = _table(spec.table)
    if spec.variant not in (1, 2):
        raise TableDataError(f"variant must be 1 or 2, got {spec.variant}", table=spec.table)
    k = spec.parameter
    low = data["min_parameter"][spec.variant]
    if k < low:
        raise TableDataError(
            f"table {spec.table} variant {spec.variant} needs k >= {low}, got {k}",
            table=spec.table,
            variant=spec.variant,
        )

    rows: dict[int, list[int]] = {}

    def put(v: int, nbrs: list[int], label: str):
        if v in rows:
            raise TableDataError(
                f"vertex {v} defined twice in {spec}", spec.table, spec.variant, label
            )
        rows[v] = nbrs

    for row in data["rows"]:
        if k < row.get("omit_below", 0):
            continue
        cell = row[f"variant_{spec.variant}"]
        put(evaluate(row["vertex"], k), [evaluate(e, k) for e in cell.split(",")], row["vertex"])

    for start, stop in data["ranges"]:
        for i in range(evaluate(start, k), evaluate(stop, k) + 1):
            ladder = [i - 2, i + 1, i + 2] if i % 2 else [i - 2, i - 1, i + 2]
            put(i, ladder, f"{start}..{stop}")
    return rows


def table_family(spec: TableFamilySpec, validate: bool = True) -> Graph:
    rows = table_rows(spec)
    n = table_order(spec.table, spec.parameter)

    missing = [v for v in range(n) if v not in rows]
    if missing or len(rows) != n:
        raise TableDataError(
            f"{spec}: rows cover {len(rows)} vertices, order is {n} (missing {missing[:5]})",
            spec.table,
            spec.variant,
        )
    edges = set()
    for v, nbrs in rows.items():
        for u in nbrs:
            if u not in rows or v not in rows[u]:
                raise TableDataError(
                    f"{spec}: row {v} lists {u} but row {u} does not list {v}",
                    spec.table,
                    spec.variant,
                    str(v),
                )
            edges.add((min(u, v), max(u, v)))
    g = build_graph(n, sorted(edges))

    if validate and not is_long_refinement(g):
        raise TableDataError(
            f"{spec}: generated graph on {n} vertices is not long-refinement",
            spec.table,
            spec.variant,
        )
    return g


def table_members(table: int, variant: int, max_order: int) -> list[tuple[TableFamilySpec, Graph]]:
    """Validated members up to ``max_order``, in increasing order."""
    data = _table(table)
    k = data["min_parameter"][variant]
    out = []
    while table_order(table, k) <= max_order:
        spec = TableFamilySpec(table=table, variant=variant, parameter=k)
        out.append((spec, table_family(spec)))
        k += 1
    return out


def corrections(table: int) -> list[dict]:
    return list(_table(table).get("corrections", []))
