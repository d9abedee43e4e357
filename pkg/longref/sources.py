"""Graph inputs for the CLI and experiment configs.

Each source is a config whose ``instantiate()`` builds the graph, so runs can name
their inputs declaratively.
"""
from __future__ import annotations

import sys
from abc import ABC
from pathlib import Path
from typing import Optional

from pydrantic import BaseConfig

from longref.families.catalog import catalog
from longref.families.tables import TableFamilySpec, table_family
from longref.formats.graph6 import parse_graph6, read_graph6_lines
from longref.graph import Graph
from longref.strings import expand_family, realize


class GraphSourceConfig(BaseConfig, ABC):
    def instantiate(self) -> Graph:
        raise NotImplementedError("Subclasses must implement this method")

    @property
    def label(self) -> str:
        return self.__class__.__name__


class Graph6Source(GraphSourceConfig):
    """Inline graph6; "-" reads the first graph from stdin."""

    text: str

    def instantiate(self) -> Graph:
        if self.text == "-":
            return next(read_graph6_lines(sys.stdin))
        return parse_graph6(self.text)

    @property
    def label(self) -> str:
        return self.text


class Graph6FileSource(GraphSourceConfig):
    path: str
    index: int = 0

    def instantiate(self) -> Graph:
        with open(Path(self.path), "r") as f:
            graphs = list(read_graph6_lines(iter(f)))
        if not graphs:
            raise ValueError(f"{self.path} holds no graphs")
        if not 0 <= self.index < len(graphs):
            raise ValueError(f"{self.path} holds {len(graphs)} graphs, index {self.index} requested")
        return graphs[self.index]

    @property
    def label(self) -> str:
        return f"{self.path}[{self.index}]"


class StringSource(GraphSourceConfig):
    string: str

    def instantiate(self) -> Graph:
        return realize(self.string).graph

    @property
    def label(self) -> str:
        return f"G({self.string})"


class StringFamilySource(GraphSourceConfig):
    family: str
    k: int = 0

    def instantiate(self) -> Graph:
        return realize(expand_family(self.family, self.k)).graph

    @property
    def label(self) -> str:
        return f"{self.family}:k={self.k}"


class TableSource(GraphSourceConfig):
    table: int
    variant: int
    k: int = 0

    def instantiate(self) -> Graph:
        return table_family(TableFamilySpec(table=self.table, variant=self.variant, parameter=self.k))

    @property
    def label(self) -> str:
        return f"table-{self.table}:v{self.variant}:k={self.k}"


class CatalogSource(GraphSourceConfig):
    order: int
    degrees: Optional[list[int]] = None
    index: int = 0

    def instantiate(self) -> Graph:
        entries = catalog(self.order, self.order, self.degrees)
        if not 0 <= self.index < len(entries):
            raise ValueError(
                f"catalog has {len(entries)} graphs of order {self.order} "
                f"with degrees {self.degrees}, index {self.index} requested"
            )
        return entries[self.index].graph

    @property
    def label(self) -> str:
        return f"catalog:n={self.order}:{self.index}"
