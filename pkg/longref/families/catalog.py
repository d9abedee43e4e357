"""Every classified long-refinement graph with maximum degree at most 4, by order."""
from __future__ import annotations

import concurrent.futures
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Optional, Sequence, Union

import tqdm
from pydrantic import RunConfig

from longref.families.extensions import deg13_graph
from longref.families.sporadic import load_sporadic, unavailable
from longref.families.tables import TableFamilySpec, table_family, table_order, load_tables
from longref.formats.graph6 import write_graph6
from longref.graph import Graph, degree_set
from longref.search.canonical import canonical_form
from longref.strings import FAMILIES, realize
from longref.structs import CatalogRecord, Provenance
from longref.utils import WandBConfig, default_max_workers, get_logger, log_summary, prepare_wandb

logger = get_logger(__name__)


@dataclass(slots=True)
class CatalogEntry:
    graph: Graph
    provenance: Provenance
    expected_failures: list[int] = field(default_factory=list)

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def degrees(self) -> tuple[int, ...]:
        return degree_set(self.graph)

    @property
    def sort_key(self) -> tuple[int, str]:
        return self.order, self.provenance.label

    def to_record(self) -> CatalogRecord:
        return CatalogRecord(
            graph6=write_graph6(self.graph),
            order=self.order,
            degrees=list(self.degrees),
            provenance=self.provenance,
            expected_failures=self.expected_failures,
        )


# expansion units; each is picklable and expands independently


@dataclass(frozen=True, slots=True)
class _Unit:
    kind: Literal["string", "table", "sporadic", "extension"]
    degrees: tuple[int, ...]
    family: str = ""
    table: int = 0
    variant: int = 0


def _units() -> list[_Unit]:
    units = [_Unit("string", (2, 3), family=fid) for fid in FAMILIES]
    for table in sorted(load_tables()):
        for variant in (1, 2):
            units.append(_Unit("table", (3, 4), family=f"table-{table}", table=table, variant=variant))
    units.append(_Unit("sporadic", ()))
    units.append(_Unit("extension", (1, 3), family="deg13-pendant"))
    return units


def _expand(unit: _Unit, min_order: int, max_order: int) -> list[CatalogEntry]:
    out = []
    if unit.kind == "string":
        for k, s in FAMILIES[unit.family].members(max_order):
            if s.order < min_order:
                continue
            provenance = Provenance(
                kind="string",
                family=unit.family,
                parameter=k,
                source=None if k is not None else str(s),
            )
            out.append(CatalogEntry(graph=realize(s).graph, provenance=provenance))

    elif unit.kind == "table":
        k = load_tables()[unit.table]["min_parameter"][unit.variant]
        while table_order(unit.table, k) <= max_order:
            if table_order(unit.table, k) >= min_order:
                spec = TableFamilySpec(table=unit.table, variant=unit.variant, parameter=k)
                out.append(
                    CatalogEntry(
                        graph=table_family(spec),
                        provenance=Provenance(
                            kind="table", family=unit.family, parameter=k, variant=unit.variant
                        ),
                    )
                )
            k += 1

    elif unit.kind == "sporadic":
        for item in load_sporadic():
            if min_order <= item.order <= max_order:
                out.append(
                    CatalogEntry(
                        graph=item.graph,
                        provenance=Provenance(kind="sporadic", family=item.id, source=item.source),
                        expected_failures=list(item.expected_failures),
                    )
                )

    elif unit.kind == "extension":
        g = deg13_graph()
        if min_order <= g.n <= max_order:
            out.append(CatalogEntry(graph=g, provenance=Provenance(kind="extension", family=unit.family)))
    return out


def _matches(degrees: tuple[int, ...], wanted: Optional[tuple[int, ...]], subset: bool) -> bool:
    if wanted is None:
        return True
    if subset:
        return set(degrees) <= set(wanted) and len(degrees) == 2
    return degrees == wanted


def catalog(
    min_order: int = 1,
    max_order: int = 30,
    degrees: Optional[Sequence[int]] = None,
    subset: bool = False,
    max_workers: Optional[int] = None,
    parallelism_strategy: Literal["thread", "process"] = "thread",
) -> list[CatalogEntry]:
    """Entries with min_order <= order <= max_order, one per isomorphism class.

    ``degrees`` filters on the exact degree set, or with ``subset`` on two-degree
    sets inside it. Entries are merged by (order, provenance label) and the first
    entry of each isomorphism class is kept.
    """
    wanted = tuple(sorted(set(degrees))) if degrees is not None else None
    units = [
        u for u in _units()
        if u.kind == "sporadic" or _matches(u.degrees, wanted, subset)
    ]
    max_workers = default_max_workers() if max_workers is None else max_workers

    entries: list[CatalogEntry] = []
    if max_workers > 1:
        with (
            concurrent.futures.ThreadPoolExecutor
            if parallelism_strategy == "thread"
            else concurrent.futures.ProcessPoolExecutor
        )(max_workers=max_workers) as executor:
            futures = [executor.submit(_expand, u, min_order, max_order) for u in units]
            for future in tqdm.tqdm(
                concurrent.futures.as_completed(futures),
                total=len(futures),
                desc="Expanding catalog",
                disable=len(futures) < 2,
            ):
                entries.extend(future.result())
    else:
        for u in units:
            entries.extend(_expand(u, min_order, max_order))

    entries = [e for e in entries if _matches(e.degrees, wanted, subset)]
    entries.sort(key=lambda e: e.sort_key)

    seen: dict[str, CatalogEntry] = {}
    for entry in entries:
        form = canonical_form(entry.graph).graph6
        if form in seen:
            logger.info(
                f"{entry.provenance.label} is isomorphic to {seen[form].provenance.label}, dropping"
            )
            continue
        seen[form] = entry
    return list(seen.values())


def unavailable_entries(degrees: Optional[Sequence[int]] = None) -> list[dict]:
    """Classified graphs the catalog cannot produce, with the reason."""
    items = list(unavailable())
    if degrees is not None:
        wanted = sorted(set(degrees))
        items = [item for item in items if sorted(item["degrees"]) == wanted]
    return items


def predicted_orders(degrees: Sequence[int], max_order: int) -> list[int]:
    """Orders the family formulas and data files provide, without building graphs."""
    wanted = tuple(sorted(set(degrees)))
    orders: set[int] = set()
    if wanted == (2, 3):
        for family in FAMILIES.values():
            orders.update(s.order for _, s in family.members(max_order))
    if wanted == (3, 4):
        for table in sorted(load_tables()):
            for variant in (1, 2):
                k = load_tables()[table]["min_parameter"][variant]
                while table_order(table, k) <= max_order:
                    orders.add(table_order(table, k))
                    k += 1
    if wanted == (1, 3):
        orders.add(deg13_graph().n)
    orders.update(item.order for item in load_sporadic() if item.degrees == wanted)
    return sorted(o for o in orders if o <= max_order)


def gap_check(max_order: int, degrees: Sequence[int] = (2, 3)) -> list[tuple[int, tuple[int, ...]]]:
    """(order, degrees) for every order in 1..max_order with no catalog entry."""
    wanted = tuple(sorted(set(degrees)))
    present = {e.order for e in catalog(1, max_order, wanted)}
    return [(n, wanted) for n in range(1, max_order + 1) if n not in present]


def write_catalog(entries: Sequence[CatalogEntry], path: Union[str, Path]) -> tuple[Path, Path]:
    """graph6 lines at ``path`` and the provenance records beside it as JSON."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        for entry in entries:
            f.write(write_graph6(entry.graph) + "\n")
    sidecar = path.with_suffix(".json")
    with open(sidecar, "w") as f:
        json.dump([entry.to_record().model_dump() for entry in entries], f, indent=2)
    return path, sidecar


class CatalogConfig(RunConfig):
    name: Optional[str] = "catalog"

    min_order: int = 1
    max_order: int = 40
    degrees: Optional[list[int]] = None

    max_workers: int = 0
    parallelism_strategy: Literal["thread", "process"] = "thread"

    wandb: Optional[WandBConfig] = None
    run_dir: Optional[Union[Path, str]] = None

    def run(self):
        assert self.run_dir is not None
        self.run_dir = Path(self.run_dir)
        logger.info(f"Exporting catalog with run dir: {self.run_dir}")

        if self.wandb is not None:
            self.wandb.name = self.name
            prepare_wandb(self.wandb, self.to_dict())

        entries = catalog(
            self.min_order,
            self.max_order,
            self.degrees,
            max_workers=self.max_workers,
            parallelism_strategy=self.parallelism_strategy,
        )
        graphs_path, sidecar = write_catalog(entries, self.run_dir / "catalog.g6")
        logger.info(f"Wrote {len(entries)} graphs to {graphs_path} and provenance to {sidecar}")

        missing = unavailable_entries(self.degrees)
        for item in missing:
            logger.warning(f"Unavailable: {item['id']} (degrees {item['degrees']}): {item['reason']}")

        by_degrees: dict[str, int] = {}
        for entry in entries:
            key = ",".join(map(str, entry.degrees))
            by_degrees[key] = by_degrees.get(key, 0) + 1
        if self.wandb is not None:
            log_summary({"num_graphs": len(entries), "unavailable": len(missing), "by_degrees": by_degrees})
        return entries
