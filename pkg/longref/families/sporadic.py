from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Optional

from longref.analyze import verify_structure
from longref.errors import Graph6Error, TableDataError
from longref.families.extensions import ladder_graph
from longref.formats.graph6 import parse_graph6, write_graph6
from longref.graph import Graph, degree_set
from longref.refine import is_long_refinement
from longref.utils import get_logger, load_yaml

logger = get_logger(__name__)

SPORADIC_PATH = Path(__file__).parent / "data" / "sporadic.yaml"


@dataclass(slots=True)
class SporadicGraph:
    id: str
    graph: Graph
    source: str
    expected_failures: list[int] = field(default_factory=list)
    ladder: Optional[dict] = None

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def degrees(self) -> tuple[int, ...]:
        return degree_set(self.graph)


def _check(item: dict) -> SporadicGraph:
    name = item["id"]
    try:
        g = parse_graph6(item["graph6"])
    except Graph6Error as e:
        raise TableDataError(f"sporadic graph {name}: {e}", row=name) from e

    if g.n != item["order"]:
        raise TableDataError(f"sporadic graph {name}: order {g.n}, data file says {item['order']}", row=name)
    if list(degree_set(g)) != list(item["degrees"]):
        raise TableDataError(
            f"sporadic graph {name}: degrees {degree_set(g)}, data file says {item['degrees']}",
            row=name,
        )
    ladder = item.get("ladder")
    if ladder is not None and write_graph6(ladder_graph(**ladder)) != item["graph6"]:
        raise TableDataError(f"sporadic graph {name}: ladder parameters build a different graph", row=name)
    if not is_long_refinement(g):
        raise TableDataError(f"sporadic graph {name} is not long-refinement", row=name)

    expected = sorted(item.get("expected_failures", []))
    failed = verify_structure(g).failed
    if failed != expected:
        raise TableDataError(
            f"sporadic graph {name}: structure checks {failed} fail, expected {expected}",
            row=name,
        )
    return SporadicGraph(
        id=name, graph=g, source=item["source"], expected_failures=expected, ladder=ladder
    )


@lru_cache(maxsize=None)
def load_sporadic(path: str = str(SPORADIC_PATH)) -> tuple[SporadicGraph, ...]:
    """Parse and validate every entry; any mismatch with its recorded data raises."""
    data = load_yaml(path)
    graphs = tuple(_check(item) for item in data.get("graphs", []))
    logger.info(f"Loaded {len(graphs)} sporadic graphs from {path}")
    return graphs


@lru_cache(maxsize=None)
def unavailable(path: str = str(SPORADIC_PATH)) -> tuple[dict, ...]:
    return tuple(load_yaml(path).get("unavailable", []))
